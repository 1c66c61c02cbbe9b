#include "tlent/closedform.hpp"

#include <stdexcept>

#include "tlent/combnumbers.hpp"

namespace tlent {

namespace {

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

// q * (b(s, 2j-i) + (p/q) b(s, 2j-i-1)) with s = i+j-2 (+1 for odd strips).
mpz_class strip_entry(bool odd, long i, long j, const mpz_class& p, const mpz_class& q) {
  const long s = i + j - 2 + (odd ? 1 : 0);
  return q * binom(s, 2 * j - i) + p * binom(s, 2 * j - i - 1);
}

std::vector<std::vector<mpz_class>> strip_matrix(bool odd, int n, const mpz_class& p,
                                                 const mpz_class& q) {
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = strip_entry(odd, i, j, p, q);
  }
  return m;
}

bool strip_odd(BoundaryKind kind) {
  if (kind == BoundaryKind::ReflectingEven) return false;
  if (kind == BoundaryKind::ReflectingOdd) return true;
  throw std::invalid_argument("determinant formula exists only for reflecting kinds");
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

GenFun genfun_from_det(BoundaryKind kind, int n) {
  require_n(n);
  const bool odd = strip_odd(kind);
  std::vector<mpz_class> values;
  for (int t = 0; t <= n; ++t) values.push_back(bareiss_det(strip_matrix(odd, n, t, 1)));
  GenFun g{kind, odd ? 2 * n + 1 : 2 * n, interpolate_integer_points(values), closed_norm(kind, n)};
  g.coeffs.resize(static_cast<std::size_t>(n) + 1);
  return g;
}

}  // namespace

mpz_class closed_norm(BoundaryKind kind, int n) {
  switch (kind) {
    case BoundaryKind::PeriodicEven: return asm_count(n);
    case BoundaryKind::ReflectingEven: return asm_vertical(2 * n + 1);
    case BoundaryKind::ReflectingOdd: return cstc_plane_partitions(2 * n + 2);
    case BoundaryKind::PeriodicOdd: break;
  }
  throw std::invalid_argument("no product formula for this kind");
}

GenFun genfun_per_even(int n) {
  require_n(n);
  GenFun g{BoundaryKind::PeriodicEven, 2 * n, std::vector<mpz_class>(n + 1), asm_count(n)};
  const mpz_class scale = factorial(2 * n - 1) * g.Z;
  for (int k = 1; k <= n; ++k) {
    const mpq_class a = ratio(binom(n + k - 2, k - 1) * scale * factorial(2 * n - k - 1),
                              factorial(3 * n - 2) * factorial(n - k));
    if (a.get_den() != 1) throw std::logic_error("non-integer cylinder coefficient");
    g.coeffs[k] = a.get_num();
  }
  return g;
}

GenFun genfun_refl_even(int n) { return genfun_from_det(BoundaryKind::ReflectingEven, n); }
GenFun genfun_refl_odd(int n) { return genfun_from_det(BoundaryKind::ReflectingOdd, n); }

GenFun genfun_closed(BoundaryKind kind, int L) {
  validate_size(kind, L);
  switch (kind) {
    case BoundaryKind::PeriodicEven: return genfun_per_even(L / 2);
    case BoundaryKind::ReflectingEven: return genfun_refl_even(L / 2);
    case BoundaryKind::ReflectingOdd: return genfun_refl_odd(L / 2);
    case BoundaryKind::PeriodicOdd: break;
  }
  throw std::invalid_argument("odd periodic sizes have no closed form");
}

mpq_class per_even_tilde(int n, const mpq_class& x) {
  require_n(n);
  // c_1 = (2n-1)!(2n-2)!/((3n-2)!(n-1)!) and
  // c_{k+1}/c_k = (n+k-1)(n-k) / (k (2n-k-1)).
  mpq_class term = ratio(factorial(2 * n - 1) * factorial(2 * n - 2),
                         factorial(3 * n - 2) * factorial(n - 1));
  mpq_class sum = term;
  for (int k = 1; k < n; ++k) {
    term *= x;
    term *= ratio(mpz_class(n + k - 1) * (n - k), mpz_class(k) * (2 * n - k - 1));
    sum += term;
  }
  return sum;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class det_unnormalised(BoundaryKind kind, int n, const mpq_class& x) {
  require_n(n);
  const bool odd = strip_odd(kind);
  const mpz_class det = bareiss_det(strip_matrix(odd, n, x.get_num(), x.get_den()));
  return ratio(det, pow_z(x.get_den(), static_cast<unsigned long>(n)));
}

mpq_class eval_det_at(BoundaryKind kind, int n, const mpq_class& x) {
  return det_unnormalised(kind, n, x) / mpq_class(closed_norm(kind, n));
}

std::vector<mpq_class> eval_det_range(BoundaryKind kind, int n_max, const mpq_class& x) {
  require_n(n_max);
  const bool odd = strip_odd(kind);
  auto m = strip_matrix(odd, n_max, x.get_num(), x.get_den());
  std::vector<mpq_class> out;
  out.reserve(n_max);
  mpz_class prev = 1;
  mpz_class qpow = 1;
  for (int k = 0; k < n_max; ++k) {
    // After k elimination steps m[k][k] is the leading (k+1)-minor.
    if (m[k][k] == 0) break;
    qpow *= x.get_den();
    out.push_back(ratio(m[k][k], qpow * closed_norm(kind, k + 1)));
    for (int i = k + 1; i < n_max; ++i) {
      for (int j = k + 1; j < n_max; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  for (int n = static_cast<int>(out.size()) + 1; n <= n_max; ++n) {
    out.push_back(eval_det_at(kind, n, x));
  }
  return out;
}

mpq_class refl_even_linear_coeff(int n) {
  require_n(n);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n));
  mpq_class p = ratio(4, two_pow);
  const mpz_class nf = factorial(n - 1);
  p *= ratio(3 * factorial(2 * n - 2) * factorial(2 * n - 1),
             nf * nf * nf * factorial(n) * factorial(n) * factorial(3 * n));
  for (int i = 1; i <= n - 1; ++i) {
    p *= ratio(factorial(3 * i + 1) * factorial(3 * i + 3) * factorial(4 * n + 2 * i - 2),
               factorial(2 * i - 1) * factorial(3 * n + 3 * i) * factorial(2 * n + i - 1));
  }
  return p / mpq_class(asm_vertical(2 * n + 1));
}

mpq_class hypergeom_form(int n, const mpq_class& x) {
  require_n(n);
  const mpq_class prefactor = ratio(factorial(2 * n - 1) * factorial(2 * n - 2),
                                    factorial(n - 1) * factorial(3 * n - 2));
  mpq_class term = 1;
  mpq_class sum = 1;
  for (int k = 0; k + 1 <= n - 1; ++k) {
    // (a)_k (b)_k / ((c)_k k!) with a = 1-n, b = n, c = 2-2n.
    term *= ratio(mpz_class(1 - n + k) * (n + k), mpz_class(2 - 2 * n + k) * (k + 1));
    term *= x;
    sum += term;
  }
  return prefactor * sum;
}

std::vector<mpq_class> ode_residual(int n) {
  const GenFun g = genfun_per_even(n);
  // F~ = sum_m b_m x^m with b_m = a_{m+1}/Z.
  std::vector<mpq_class> b(n);
  for (int m = 0; m < n; ++m) b[m] = mpq_class(g.coeffs[m + 1]) / mpq_class(g.Z);
  auto coef = [&](int m) { return m >= 0 && m < n ? b[m] : mpq_class(0); };
  std::vector<mpq_class> r(n + 1);
  for (int m = 0; m <= n; ++m) {
    // x^2 F'' - x F'' + 2(n-1) F' + 2x F' - n(n-1) F, read off at x^m.
    r[m] = mpq_class(m * (m - 1)) * coef(m) - mpq_class((m + 1) * m) * coef(m + 1) +
           mpq_class(2 * (n - 1) * (m + 1)) * coef(m + 1) + mpq_class(2 * m) * coef(m) -
           mpq_class(n * (n - 1)) * coef(m);
  }
  return r;
}

std::vector<mpz_class> interpolate_integer_points(const std::vector<mpz_class>& v) {
  // Newton form over falling factorials, then expansion into monomials.
  const std::size_t d = v.size();
  std::vector<mpz_class> diff = v;
  std::vector<mpz_class> newton(d);
  for (std::size_t k = 0; k < d; ++k) {
    newton[k] = diff[0];
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  std::vector<mpq_class> poly(d, 0);
  std::vector<mpz_class> falling{1};  // x(x-1)...(x-k+1)
  for (std::size_t k = 0; k < d; ++k) {
    const mpq_class c(newton[k], factorial(static_cast<long>(k)));
    mpq_class cc = c;
    cc.canonicalize();
    for (std::size_t i = 0; i < falling.size(); ++i) poly[i] += cc * falling[i];
    std::vector<mpz_class> next(falling.size() + 1, 0);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * static_cast<long>(k);
    }
    falling = std::move(next);
  }
  std::vector<mpz_class> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (poly[i].get_den() != 1) throw std::logic_error("interpolated coefficient is not an integer");
    out[i] = poly[i].get_num();
  }
  return out;
}

}  // namespace tlent
