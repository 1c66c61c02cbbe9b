#include <doctest.h>

#include "tlent/checks.hpp"
#include "tlent/reference_tables.hpp"

using namespace tlent;

TEST_CASE("reference tables cover the small sizes") {
  CHECK(reference_table(BoundaryKind::PeriodicEven).size() == 7);
  CHECK(reference_table(BoundaryKind::PeriodicOdd).size() == 6);
  CHECK(reference_table(BoundaryKind::ReflectingEven).size() == 7);
  CHECK(reference_table(BoundaryKind::ReflectingOdd).size() == 6);
  const ReferenceRow& row = reference_table(BoundaryKind::PeriodicEven)[5];
  CHECK(row.L == 12);
  CHECK(row.Z == "7436");
  CHECK(row.zf_minus_one == "0");
}

TEST_CASE("every suite passes on a small budget") {
  CheckBudget b;
  b.table_max_size = 10;
  b.equivalence_max_size = 10;
  b.sum_rule_max_size = 10;
  b.periodic_odd_max_size = 13;
  b.lemma_max_size = 8;
  b.ode_n_max = 12;
  b.proved_n_max = 6;
  b.conjectured_n_max = 6;
  const CheckReport r = run_checks("all", b);
  CHECK(r.ok(true));
  CHECK(r.count(IdentityStatus::Proved, false) == 0);
  CHECK(r.count(IdentityStatus::Conjectured, true) > 0);
  CHECK(r.skipped() == 0);
  for (const auto& o : r.outcomes) CHECK_MESSAGE(o.pass, o.suite, ": ", o.name, " ", o.detail);
}

TEST_CASE("odd periodic sizes beyond the oracle budget are skipped, not passed") {
  CheckBudget b;
  b.proved_n_max = 6;
  b.conjectured_n_max = 6;
  b.periodic_odd_max_size = 9;
  const CheckReport r = check_identities(b);
  CHECK(r.skipped() > 0);
  for (const auto& o : r.outcomes) {
    if (o.skipped) CHECK_FALSE(o.pass);
  }
}

TEST_CASE("unknown scope") { CHECK_THROWS_AS(run_checks("everything", {}), std::invalid_argument); }
