// Mathematical constants at arbitrary precision.
#pragma once

#include "tlent/real.hpp"

namespace tlent {

/// Glaisher-Kinkelin constant from the Euler-Maclaurin expansion of the
/// hyperfactorial.
Real glaisher(long bits);
Real gamma_third(long bits);
Real gamma_sixth(long bits);

struct ConstantSelfTest {
  Real reflection_third;  // Gamma(1/3) Gamma(2/3) - 2 pi / sqrt 3
  Real reflection_sixth;  // Gamma(1/6) Gamma(5/6) - 2 pi
  Real glaisher_literal;  // A against a 400-digit literal
  /// The literal comparison is held to 1e-395 at most.
  bool ok(const Real& tol) const;
};

ConstantSelfTest self_test_constants(long bits);

}  // namespace tlent
