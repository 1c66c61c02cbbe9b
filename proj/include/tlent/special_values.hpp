// Closed-form values of F_L(x) at x in {-1, 0, 1/2, 1, 2} and at x -> infinity,
// tagged by whether they are theorems or observations.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlent/genfun.hpp"

namespace tlent {

enum class IdentityStatus { Proved, Conjectured };
std::string_view to_string(IdentityStatus s);

enum class SpecialPoint { MinusOne, Zero, Half, One, Two, Infinity };

struct SpecialValue {
  std::string name;
  IdentityStatus status;
  /// F_L at the point. At Zero for even L it is the coefficient of x, at
  /// Infinity the limit of F_L(x)/x^n.
  mpq_class value;

  /// The same value for F~_L.
  mpq_class tilde(BoundaryKind kind, SpecialPoint point) const;
};

/// Product-formula value where one is known, for sizes L = 2n or 2n+1.
std::optional<SpecialValue> special_value(BoundaryKind kind, int n, SpecialPoint point);

/// Every closed-form value listed for the kind.
std::vector<SpecialValue> special_values(BoundaryKind kind, int n);

/// Maps -1, 0, 1/2, 1, 2 to their point; anything else to nullopt.
std::optional<SpecialPoint> special_point(const mpq_class& x);
/// The finite point as a rational; throws std::invalid_argument for Infinity.
mpq_class special_point_value(SpecialPoint p);

struct IdentityCheck {
  std::string name;
  IdentityStatus status;
  bool pass;
  std::string expected;
  std::string actual;
};

/// Compares every listed identity with the exact polynomial `g`.
std::vector<IdentityCheck> check_special_values(const GenFun& g);
/// Same, obtaining the polynomial from the closed form (or the oracle for
/// odd periodic sizes).
std::vector<IdentityCheck> check_special_values(BoundaryKind kind, int n);

}  // namespace tlent
