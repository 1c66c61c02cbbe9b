// Published Z_L F_L(x) polynomials for L <= 14 with the columns Z_L,
// Z_L F_L(-1) and Z_L F_L(2), as decimal strings.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "tlent/combinatorics.hpp"

namespace tlent {

struct ReferenceRow {
  int L;
  /// Entry k is the coefficient of x^k.
  std::vector<std::string> coeffs;
  std::string Z;
  std::string zf_minus_one;
  std::string zf_two;
};

std::span<const ReferenceRow> reference_table(BoundaryKind kind);

}  // namespace tlent
