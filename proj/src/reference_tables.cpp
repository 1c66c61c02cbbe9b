#include "tlent/reference_tables.hpp"

namespace tlent {

namespace {

const std::vector<ReferenceRow> kPeriodicEven = {
    {2, {"0", "1"}, "1", "-1", "2"},
    {4, {"0", "1", "1"}, "2", "0", "6"},
    {6, {"0", "2", "3", "2"}, "7", "-1", "32"},
    {8, {"0", "7", "14", "14", "7"}, "42", "0", "294"},
    {10, {"0", "42", "105", "135", "105", "42"}, "429", "-9", "4608"},
    {12, {"0", "429", "1287", "2002", "2002", "1287", "429"}, "7436", "0", "122694"},
    {14, {"0", "7436", "26026", "47320", "56784", "47320", "26026", "7436"}, "218348", "-676", "5537792"},
};

const std::vector<ReferenceRow> kPeriodicOdd = {
    {3, {"2", "1"}, "3", "1", "4"},
    {5, {"10", "11", "4"}, "25", "3", "48"},
    {7, {"140", "232", "167", "49"}, "588", "26", "1664"},
    {9, {"5544", "12182", "12617", "7097", "1764"}, "39204", "646", "165376"},
    {11, {"622908", "1699522", "2262448", "1804988", "849080", "184041"}, "7422987", "45885", "46986240"},
    {13, {"198846076", "646978332", "1044949413", "1059015059", "703061958", "286853502", "55294096"}, "3994998436", "9304650", "38111846400"},
};

const std::vector<ReferenceRow> kReflectingEven = {
    {2, {"0", "1"}, "1", "-1", "2"},
    {4, {"0", "1", "2"}, "3", "1", "10"},
    {6, {"0", "4", "11", "11"}, "26", "-4", "140"},
    {8, {"0", "50", "171", "255", "170"}, "646", "36", "5544"},
    {10, {"0", "1862", "7540", "14196", "14858", "7429"}, "45885", "-1089", "622908"},
    {12, {"0", "202860", "944119", "2107417", "2828644", "2301150", "920460"}, "9304650", "81796", "198846076"},
    {14, {"0", "64080720", "335905878", "859371991", "1374229792", "1453822999", "971405460", "323801820"}, "5382618660", "-19536400", "180473355920"},
};

const std::vector<ReferenceRow> kReflectingOdd = {
    {3, {"1", "1"}, "2", "0", "3"},
    {5, {"3", "5", "3"}, "11", "1", "25"},
    {7, {"26", "59", "59", "26"}, "170", "0", "588"},
    {9, {"646", "1837", "2463", "1837", "646"}, "7429", "81", "39204"},
    {11, {"45885", "156107", "258238", "258238", "156107", "45885"}, "920460", "0", "7422987"},
    {13, {"9304650", "36756435", "71760049", "88159552", "71760049", "36756435", "9304650"}, "323801820", "456976", "3994998436"},
};
}  // namespace

std::span<const ReferenceRow> reference_table(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::PeriodicEven: return kPeriodicEven;
    case BoundaryKind::PeriodicOdd: return kPeriodicOdd;
    case BoundaryKind::ReflectingEven: return kReflectingEven;
    case BoundaryKind::ReflectingOdd: return kReflectingOdd;
  }
  return {};
}

}  // namespace tlent
