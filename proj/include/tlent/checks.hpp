// Exact verification suites: reference tables, oracle against closed form,
// sum rules, boundary-loop counts, the differential equation and the
// special-value identities.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlent/cache.hpp"
#include "tlent/special_values.hpp"

namespace tlent {

struct CheckOutcome {
  std::string suite;
  std::string name;
  IdentityStatus status = IdentityStatus::Proved;
  bool pass = false;
  /// Not run because the size is beyond the budget.
  bool skipped = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckOutcome> outcomes;

  int count(IdentityStatus s, bool pass) const;
  int skipped() const;
  /// No proved failures, and no conjectured failures when `strict`.
  bool ok(bool strict = false) const;
  void append(const CheckReport& other);
};

struct CheckBudget {
  int table_max_size = 14;
  int equivalence_max_size = 14;
  int lemma_max_size = 12;
  int ode_n_max = 50;
  int proved_n_max = 20;
  int conjectured_n_max = 12;
  /// Largest odd periodic size handed to the oracle.
  int periodic_odd_max_size = 17;
  /// Largest size for oracle sum rules on the other kinds.
  int sum_rule_max_size = 16;
  const GenFunCache* cache = nullptr;
};

/// Published polynomials and their Z, Z F(-1), Z F(2) columns, through both
/// the closed form and the oracle.
CheckReport check_tables(const CheckBudget& b);
/// Oracle and closed form agree coefficient by coefficient.
CheckReport check_oracle_equivalence(const CheckBudget& b);
/// Oracle Z_L equals the product formula for every size in budget.
CheckReport check_sum_rules(const CheckBudget& b);
/// The three boundary-loop counts agree on every Dyck-presentable pattern,
/// and loop tracing agrees with the right-opening count.
CheckReport check_lemma(const CheckBudget& b);
/// Zero differential-equation residual and hypergeometric form against the
/// binomial sum on a rational grid.
CheckReport check_ode(const CheckBudget& b);
/// Every listed special value, plus the vanishing of F_{2n}(-1) for even n
/// on the cylinder.
CheckReport check_identities(const CheckBudget& b);

/// Scope is tables (with equivalence and sum rules), identities, lemma, ode
/// or all. Throws std::invalid_argument for anything else.
CheckReport run_checks(std::string_view scope, const CheckBudget& b);

}  // namespace tlent
