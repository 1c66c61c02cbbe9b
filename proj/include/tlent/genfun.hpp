// The finite-size generating function Z_L F_L(x) = sum_k a_k x^k together
// with its normalisation Z_L.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tlent/combinatorics.hpp"

namespace tlent {

struct GenFun {
  BoundaryKind kind{};
  int L = 0;
  /// coeffs[k] is a_k; the vector has length n+1 with n = floor(L/2).
  std::vector<mpz_class> coeffs;
  mpz_class Z;

  int n() const { return L / 2; }
  /// Sum of coefficients equals Z.
  bool normalised() const;
  /// Z_L F_L(x).
  mpq_class eval_unnormalised(const mpq_class& x) const;
  /// F_L(x).
  mpq_class eval(const mpq_class& x) const;
  /// F_L(x)/x for even L, F_L(x) for odd L; at x = 0 with even L this is
  /// the coefficient of x.
  mpq_class eval_tilde(const mpq_class& x) const;

  /// Descending powers, e.g. "429x^6 + 1287x^5 + ... + 429x".
  std::string polynomial() const;

  friend bool operator==(const GenFun&, const GenFun&) = default;
};

mpq_class eval_genfun(const GenFun& g, const mpq_class& x);

/// Exact rational from "p/q", an integer, or a decimal such as "-0.25" or
/// "1.5e-3". Throws std::invalid_argument.
mpq_class parse_rational(const std::string& s);
std::string format_rational(const mpq_class& q);

}  // namespace tlent
