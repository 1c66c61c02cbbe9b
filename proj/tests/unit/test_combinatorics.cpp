#include <doctest.h>

#include <algorithm>

#include <set>

#include "tlent/combinatorics.hpp"
#include "tlent/combnumbers.hpp"

using namespace tlent;

namespace {

std::vector<DyckPath> all_paths(int L) {
  std::vector<DyckPath> out;
  for (const auto& p : enumerate_link_patterns(L % 2 ? BoundaryKind::ReflectingOdd : BoundaryKind::ReflectingEven, L)) {
    out.push_back(to_dyck(p));
  }
  return out;
}

constexpr BoundaryKind kKinds[] = {BoundaryKind::PeriodicEven, BoundaryKind::PeriodicOdd,
                                   BoundaryKind::ReflectingEven, BoundaryKind::ReflectingOdd};

}  // namespace

TEST_CASE("kind names round-trip") {
  for (auto k : kKinds) CHECK(parse_kind(to_string(k)) == k);
  CHECK_FALSE(parse_kind("cylinder").has_value());
  CHECK_THROWS_AS(validate_size(BoundaryKind::PeriodicEven, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_size(BoundaryKind::ReflectingOdd, 1), std::invalid_argument);
  CHECK_NOTHROW(validate_size(BoundaryKind::ReflectingOdd, 3));
}

TEST_CASE("pattern counts") {
  const auto two = enumerate_link_patterns(BoundaryKind::ReflectingEven, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == LinkPattern(BoundaryKind::ReflectingEven, {2, 1}));
  CHECK(enumerate_link_patterns(BoundaryKind::ReflectingEven, 8).size() == 14);
  for (int n = 1; n <= 6; ++n) {
    const mpz_class catalan = binom(2 * n, n) / (n + 1);
    CHECK(enumerate_link_patterns(BoundaryKind::ReflectingEven, 2 * n).size() == catalan.get_ui());
    CHECK(enumerate_link_patterns(BoundaryKind::PeriodicEven, 2 * n).size() == catalan.get_ui());
    CHECK(enumerate_link_patterns(BoundaryKind::ReflectingOdd, 2 * n + 1).size() ==
          binom(2 * n + 1, n).get_ui() - binom(2 * n + 1, n - 1).get_ui());
    CHECK(enumerate_link_patterns(BoundaryKind::PeriodicOdd, 2 * n + 1).size() == binom(2 * n + 1, n).get_ui());
  }
}

TEST_CASE("enumeration is duplicate-free and canonical") {
  for (auto k : kKinds) {
    for (int L = is_odd(k) ? 3 : 2; L <= 11; L += 2) {
      const auto ps = enumerate_link_patterns(k, L);
      std::set<LinkPattern> seen(ps.begin(), ps.end());
      CHECK(seen.size() == ps.size());
    }
  }
  const auto ps = enumerate_link_patterns(BoundaryKind::ReflectingEven, 8);
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const DyckPath a = to_dyck(ps[i - 1]), b = to_dyck(ps[i]);
    CHECK(std::ranges::lexicographical_compare(a.steps(), b.steps()));
  }
}

TEST_CASE("malformed patterns are rejected") {
  CHECK_THROWS_AS(LinkPattern(BoundaryKind::ReflectingEven, {3, 4, 1, 2}), std::invalid_argument);  // crossing
  CHECK_THROWS_AS(LinkPattern(BoundaryKind::ReflectingEven, {2, 2, 4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(LinkPattern(BoundaryKind::ReflectingOdd, {kDefect, kDefect, 4, 3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("DU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UUUD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UDx"), std::invalid_argument);
}

TEST_CASE("Dyck words of simple patterns") {
  const LinkPattern a0 = LinkPattern::small_arcs(BoundaryKind::ReflectingEven, 4);
  const LinkPattern nested(BoundaryKind::ReflectingEven, {4, 3, 2, 1});
  CHECK(to_dyck(a0).to_string() == "UDUD");
  CHECK(to_dyck(nested).to_string() == "UUDD");
  CHECK(from_dyck(DyckPath::parse("UDUD")) == a0);
  CHECK(from_dyck(DyckPath::parse("UUDD")) == nested);
  CHECK(to_dyck(LinkPattern::small_arcs(BoundaryKind::ReflectingOdd, 5)).to_string() == "UDUDU");
}

TEST_CASE("Dyck bijection round-trips on every path") {
  for (int L = 2; L <= 13; ++L) {
    const auto paths = all_paths(L);
    for (const auto& d : paths) CHECK(to_dyck(from_dyck(d)) == d);
  }
  CHECK(all_paths(12).size() == 132);
}

TEST_CASE("odd periodic patterns with a covered defect have no Dyck word") {
  const LinkPattern p(BoundaryKind::PeriodicOdd, {3, kDefect, 1});
  CHECK_FALSE(p.dyck_presentable());
  CHECK_THROWS_AS(to_dyck(p), std::invalid_argument);
  CHECK(p.defect() == 2);
}

TEST_CASE("loop counts on worked examples") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(loops_right_openings(LinkPattern::small_arcs(BoundaryKind::ReflectingEven, 2 * n)) == n);
    CHECK(closed_loops_with_small_arcs(LinkPattern::small_arcs(BoundaryKind::ReflectingOdd, 2 * n + 1)) == n);
  }
  const LinkPattern nested6(BoundaryKind::ReflectingEven, {6, 5, 4, 3, 2, 1});
  CHECK(loops_right_openings(nested6) == 2);
  CHECK(closed_loops_with_small_arcs(nested6) == 2);

  const DyckPath ten = DyckPath::parse("UUUUDDDUDD");
  CHECK(signed_tile_sum(ten) == 3);
  CHECK(signed_tile_sum_by_column(ten) == 3);
  CHECK(loops_right_openings(from_dyck(ten)) == 2);

  const DyckPath eighteen = DyckPath::parse("UUUUDUDDDUUDUUDDDD");
  CHECK(dyck_ribbons(eighteen) == 4);
  CHECK(loops_right_openings(from_dyck(eighteen)) == 4);

  const DyckPath seventeen = DyckPath::parse("UUUDUDDDUUUDUUDDD");
  CHECK(seventeen.end_height() == 1);
  CHECK(dyck_ribbons(seventeen) == loops_right_openings(from_dyck(seventeen)) + 1);

  CHECK(signed_tile_sum(to_dyck(LinkPattern::small_arcs(BoundaryKind::ReflectingEven, 10))) == 0);
  CHECK(dyck_ribbons(to_dyck(LinkPattern::small_arcs(BoundaryKind::ReflectingEven, 10))) == 5);
}

TEST_CASE("three loop counts agree for every pattern up to L = 12") {
  for (int L = 2; L <= 12; ++L) {
    const int n = L / 2;
    for (const auto& d : all_paths(L)) {
      const LinkPattern p = from_dyck(d);
      const int k = loops_right_openings(p);
      CHECK(k == n - signed_tile_sum(d));
      CHECK(signed_tile_sum(d) == signed_tile_sum_by_column(d));
      CHECK(k == dyck_ribbons(d) - L % 2);
      CHECK(k == closed_loops_with_small_arcs(p));
    }
  }
}

TEST_CASE("generator action") {
  const LinkPattern p(BoundaryKind::ReflectingEven, {8, 3, 2, 7, 6, 5, 4, 1});
  const GeneratorAction a = apply_ei(p, 3);
  CHECK(a.closed_loops == 0);
  CHECK(a.pattern == LinkPattern(BoundaryKind::ReflectingEven, {8, 7, 4, 3, 6, 5, 2, 1}));

  const LinkPattern a0 = LinkPattern::small_arcs(BoundaryKind::ReflectingEven, 6);
  const GeneratorAction b = apply_ei(a0, 1);
  CHECK(b.pattern == a0);
  CHECK(b.closed_loops == 1);

  CHECK_THROWS_AS(apply_ei(a0, 6), std::out_of_range);
  CHECK_NOTHROW(apply_ei(LinkPattern::small_arcs(BoundaryKind::PeriodicEven, 6), 6));
}

TEST_CASE("Temperley-Lieb relations hold on every pattern") {
  for (auto k : kKinds) {
    for (int L = is_odd(k) ? 3 : 4; L <= 8; L += 2) {
      const int g = generator_count(k, L);
      for (const auto& p : enumerate_link_patterns(k, L)) {
        for (int i = 1; i <= g; ++i) {
          const GeneratorAction once = apply_ei(p, i);
          const GeneratorAction twice = apply_ei(once.pattern, i);
          CHECK(twice.pattern == once.pattern);
          CHECK(twice.closed_loops == 1);
          for (int j : {i - 1, i + 1}) {
            int jj = j;
            if (is_periodic(k)) jj = (j - 1 + L) % L + 1;
            if (jj < 1 || jj > g) continue;
            const GeneratorAction x = apply_ei(apply_ei(once.pattern, jj).pattern, i);
            CHECK(x.pattern == once.pattern);
          }
        }
      }
    }
  }
}

TEST_CASE("rotation and reflection are symmetries of the pattern set") {
  for (auto k : {BoundaryKind::PeriodicEven, BoundaryKind::PeriodicOdd}) {
    for (int L = is_odd(k) ? 3 : 2; L <= 9; L += 2) {
      const auto ps = enumerate_link_patterns(k, L);
      const std::set<LinkPattern> all(ps.begin(), ps.end());
      for (const auto& p : ps) {
        CHECK(all.count(rotate(p, 1)) == 1);
        CHECK(rotate(p, L) == p);
        CHECK(all.count(reflect(p)) == 1);
      }
    }
  }
}
