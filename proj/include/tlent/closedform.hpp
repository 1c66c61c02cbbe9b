// Exact finite-size formulas: the binomial sum on the cylinder, the
// determinant formulas on the strip, the hypergeometric representation and
// its differential equation.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tlent/genfun.hpp"

namespace tlent {

GenFun genfun_per_even(int n);
GenFun genfun_refl_even(int n);
GenFun genfun_refl_odd(int n);
/// Throws std::invalid_argument for PeriodicOdd, which has no closed form.
GenFun genfun_closed(BoundaryKind kind, int L);

/// Z_L for the three kinds with a closed form, from the product formulas.
mpz_class closed_norm(BoundaryKind kind, int n);

/// F~_{2n}(x) on the cylinder by the binomial sum.
mpq_class per_even_tilde(int n, const mpq_class& x);

/// Integer determinant of a square matrix by fraction-free elimination with
/// row pivoting. The matrix is consumed.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m);

/// Z_L F_L(x) from the strip determinant, kind ReflectingEven or
/// ReflectingOdd, with L = 2n or 2n+1.
mpq_class det_unnormalised(BoundaryKind kind, int n, const mpq_class& x);
/// F_L(x) = det / Z_L.
mpq_class eval_det_at(BoundaryKind kind, int n, const mpq_class& x);
/// F_L(x) for n = 1..n_max in one elimination pass; entry n-1 holds size n.
/// Sizes whose leading minor vanishes, and all sizes after them, are
/// evaluated one at a time.
std::vector<mpq_class> eval_det_range(BoundaryKind kind, int n_max, const mpq_class& x);

/// lim_{x->0} F_{2n}(x)/x on the strip from its product formula.
mpq_class refl_even_linear_coeff(int n);

/// prefactor * 2F1(1-n, n; 2-2n; x), the cylinder F~_{2n}(x).
mpq_class hypergeom_form(int n, const mpq_class& x);

/// x(x-1)F~'' + 2(n-1+x)F~' - n(n-1)F~ for the exact cylinder polynomial;
/// coefficient k of the result is entry k.
std::vector<mpq_class> ode_residual(int n);

/// Polynomial through (0, v[0]), (1, v[1]), ... with integer coefficients;
/// throws std::logic_error if the data do not come from one.
std::vector<mpz_class> interpolate_integer_points(const std::vector<mpz_class>& v);

}  // namespace tlent
