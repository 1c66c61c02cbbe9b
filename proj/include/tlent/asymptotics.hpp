// Large-n expansions of log F~_L(x) in the r-parametrisation
//   x = sin(pi(r+1)/3) / sin(pi r/3),  0 < r < 3,
// with the Low branch for x >= -1 (r <= 5/2) and the High branch below.
#pragma once

#include <gmpxx.h>

#include "tlent/combinatorics.hpp"
#include "tlent/real.hpp"
#include "tlent/special_values.hpp"

namespace tlent {

enum class Branch { Low, High };
const char* to_string(Branch b);

struct RParam {
  Real r;
  Branch branch;
};

/// Throws std::domain_error unless 0 < r < 3.
Real x_of_r(const Real& r);
RParam r_of_x(const Real& x);

/// Cylinder coefficients of log F~ = n f_0 + f_1 + f_2/n + f_3/n^2 + ...
/// for j = 0..7; f_{j+1} = -S_{-j} for j >= 1.
inline constexpr int kMaxFIndex = 7;
Real f_coeff(int j, const Real& x);
/// One branch's expression evaluated at r, whichever side of 5/2 r is on.
Real f_coeff_branch(int j, const Real& r, Branch b);
/// S_{-j}(r) for j = 1..6 in its Low-branch form.
Real s_minus(int j, const Real& r);

/// Strip coefficients g_0 = f_0 and the conjectured corner term g_1.
/// `geometry` is ReflectingEven or ReflectingOdd.
Real g_coeff(BoundaryKind geometry, int j, const Real& x);
Real g_coeff_branch(BoundaryKind geometry, int j, const Real& r, Branch b);

/// Sign of F~ at size n. The cylinder uses (-1)^{n+1} below x = -1; the
/// strip signs are read from the exact value.
int epsilon_sign(BoundaryKind geometry, int n, const mpq_class& x);

/// (sqrt 3/2) sin(pi r/2)/sin(pi r/3) for x > -1.
Real affleck_ludwig_g(const Real& x);

struct ConstantTriple {
  Real g0;
  Real g1;
  Real g2;
};

/// Closed-form (g_0, g_1, g_2) on the strip at x in {-1, 0, 1/2, 2}.
ConstantTriple strip_constants(BoundaryKind geometry, SpecialPoint x, long bits);

}  // namespace tlent
