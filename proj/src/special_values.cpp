#include "tlent/special_values.hpp"

#include <stdexcept>

#include "tlent/closedform.hpp"
#include "tlent/combnumbers.hpp"
#include "tlent/groundstate.hpp"

namespace tlent {

std::string_view to_string(IdentityStatus s) {
  return s == IdentityStatus::Proved ? "proved" : "conjectured";
}

namespace {

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class two_pow(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? ratio(1, p) : mpq_class(p);
}

// Gamma(n/2+1) / Gamma(3n/2+1), exact for both parities.
mpq_class gamma_ratio(long n) {
  if (n % 2 == 0) return ratio(factorial(n / 2), factorial(3 * n / 2));
  const long m = (n - 1) / 2;
  // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!); the sqrt(pi) factors cancel.
  return ratio(factorial(2 * m + 2) * factorial(3 * m + 2), factorial(m + 1) * factorial(6 * m + 4)) *
         two_pow(2 * (2 * m + 1));
}

mpq_class sq(const mpz_class& a) { return mpq_class(a * a); }

std::vector<std::pair<SpecialPoint, SpecialValue>> table(BoundaryKind kind, int n) {
  using P = SpecialPoint;
  constexpr auto proved = IdentityStatus::Proved;
  constexpr auto conj = IdentityStatus::Conjectured;
  std::vector<std::pair<P, SpecialValue>> t;
  t.push_back({P::One, {"F(1) = 1", proved, 1}});
  switch (kind) {
    case BoundaryKind::PeriodicEven: {
      const mpz_class a = asm_count(n);
      const mpq_class lead = ratio(asm_count(n - 1), a);
      mpq_class minus_one = 0;
      if (n % 2) minus_one = -sq(asm_vertical(n)) / a;
      t.push_back({P::MinusOne, {"F(-1) = 0 (n even), -AV_n^2/A_n (n odd)", proved, minus_one}});
      t.push_back({P::Zero, {"[x^1] F = A_{n-1}/A_n", proved, lead}});
      t.push_back({P::Infinity, {"[x^n] F = A_{n-1}/A_n", proved, lead}});
      const mpq_class f2 = ratio(factorial(2 * n), 2 * factorial(n)) * 3 * gamma_ratio(n);
      t.push_back({P::Two, {"F(2) = (2n)!/(2 n!) * 3 Gamma(n/2+1)/Gamma(3n/2+1)", proved, f2}});
      t.push_back({P::Half, {"F(1/2) = 2^(-n-1) (2n)!/(2 n!) * 3 Gamma(n/2+1)/Gamma(3n/2+1)", proved,
                             two_pow(-n - 1) * f2}});
      if (n % 2) {
        const mpq_class av2 = sq(asm_vertical(n)) / a;
        t.push_back({P::Two, {"F(2) = 2^(2n-1) AV_n^2/A_n (n odd)", proved, two_pow(2 * n - 1) * av2}});
        t.push_back({P::Half, {"F(1/2) = 2^(n-2) AV_n^2/A_n (n odd)", proved, two_pow(n - 2) * av2}});
      }
      break;
    }
    case BoundaryKind::PeriodicOdd: {
      const mpz_class z = asm_half_turn(2 * n + 1);
      const mpz_class av = asm_vertical(2 * n + 1);
      t.push_back({P::Infinity, {"[x^n] F = A_n^2/AHT_{2n+1}", conj, sq(asm_count(n)) / z}});
      t.push_back({P::Zero, {"F(0) = AHT_{2n}/AHT_{2n+1}", conj, ratio(asm_half_turn(2 * n), z)}});
      t.push_back({P::MinusOne, {"F(-1) = AV_{2n+1}/AHT_{2n+1}", conj, ratio(av, z)}});
      t.push_back({P::Two, {"F(2) = 2^(2n) AV_{2n+1}/AHT_{2n+1}", conj, two_pow(2 * n) * ratio(av, z)}});
      break;
    }
    case BoundaryKind::ReflectingEven: {
      const mpz_class z = asm_vertical(2 * n + 1);
      t.push_back({P::Zero, {"[x^1] F = product formula", proved, refl_even_linear_coeff(n)}});
      t.push_back({P::Infinity, {"[x^n] F = C_{2n}/AV_{2n+1}", proved, ratio(cstc_plane_partitions(2 * n), z)}});
      const mpz_class avh = asm_vertical_horizontal(2 * n + 1);
      mpq_class m1 = sq(avh) / z;
      if (n % 2) m1 = -m1;
      t.push_back({P::MinusOne, {"F(-1) = (-1)^n AVH_{2n+1}^2/AV_{2n+1}", conj, m1}});
      t.push_back({P::Two, {"F(2) = AHT_{2n}/AV_{2n+1}", conj, ratio(asm_half_turn(2 * n), z)}});
      t.push_back({P::Half, {"F(1/2) = 2^(-n) A_n^2/AV_{2n+1}", conj, two_pow(-n) * sq(asm_count(n)) / z}});
      break;
    }
    case BoundaryKind::ReflectingOdd: {
      const mpz_class z = cstc_plane_partitions(2 * n + 2);
      const mpq_class av = ratio(asm_vertical(2 * n + 1), z);
      t.push_back({P::Infinity, {"[x^n] F = AV_{2n+1}/C_{2n+2}", proved, av}});
      t.push_back({P::Zero, {"F(0) = AV_{2n+1}/C_{2n+2}", proved, av}});
      mpq_class m1 = 0;
      if (n % 2 == 0) {
        const mpz_class a = asm_vertical(n + 1);
        m1 = ratio(a * a * a * a, z);
      }
      t.push_back({P::MinusOne, {"F(-1) = AV_{n+1}^4/C_{2n+2} (n even), 0 (n odd)", conj, m1}});
      const mpq_class aht = ratio(asm_half_turn(2 * n + 1), z);
      t.push_back({P::Two, {"F(2) = AHT_{2n+1}/C_{2n+2}", conj, aht}});
      t.push_back({P::Half, {"F(1/2) = 2^(-n) AHT_{2n+1}/C_{2n+2}", conj, two_pow(-n) * aht}});
      break;
    }
  }
  return t;
}

}  // namespace

mpq_class special_point_value(SpecialPoint p) {
  switch (p) {
    case SpecialPoint::MinusOne: return -1;
    case SpecialPoint::Zero: return 0;
    case SpecialPoint::Half: return mpq_class(1, 2);
    case SpecialPoint::One: return 1;
    case SpecialPoint::Two: return 2;
    case SpecialPoint::Infinity: break;
  }
  throw std::invalid_argument("no finite value");
}

mpq_class SpecialValue::tilde(BoundaryKind kind, SpecialPoint point) const {
  if (is_odd(kind) || point == SpecialPoint::Zero || point == SpecialPoint::Infinity) return value;
  return value / special_point_value(point);
}

std::optional<SpecialPoint> special_point(const mpq_class& x) {
  for (auto p : {SpecialPoint::MinusOne, SpecialPoint::Zero, SpecialPoint::Half, SpecialPoint::One,
                 SpecialPoint::Two}) {
    if (special_point_value(p) == x) return p;
  }
  return std::nullopt;
}

std::optional<SpecialValue> special_value(BoundaryKind kind, int n, SpecialPoint point) {
  for (auto& [p, v] : table(kind, n)) {
    if (p == point) return v;
  }
  return std::nullopt;
}

std::vector<SpecialValue> special_values(BoundaryKind kind, int n) {
  std::vector<SpecialValue> out;
  for (auto& [p, v] : table(kind, n)) out.push_back(v);
  return out;
}

std::vector<IdentityCheck> check_special_values(const GenFun& g) {
  const int n = g.n();
  std::vector<IdentityCheck> out;
  const mpz_class z = g.kind == BoundaryKind::PeriodicOdd ? asm_half_turn(2 * n + 1) : closed_norm(g.kind, n);
  out.push_back({"Z_L sum rule", IdentityStatus::Proved, z == g.Z, z.get_str(), g.Z.get_str()});
  for (auto& [p, v] : table(g.kind, n)) {
    mpq_class actual;
    if (p == SpecialPoint::Infinity) {
      actual = mpq_class(g.coeffs.back()) / mpq_class(g.Z);
    } else if (p == SpecialPoint::Zero) {
      actual = g.eval_tilde(0);
    } else {
      actual = g.eval(special_point_value(p));
    }
    out.push_back({v.name, v.status, actual == v.value, format_rational(v.value), format_rational(actual)});
  }
  return out;
}

std::vector<IdentityCheck> check_special_values(BoundaryKind kind, int n) {
  const int L = is_odd(kind) ? 2 * n + 1 : 2 * n;
  if (kind == BoundaryKind::PeriodicOdd) {
    OracleLimits limits;
    limits.max_size = std::max(limits.max_size, L);
    return check_special_values(genfun_oracle(kind, L, limits));
  }
  return check_special_values(genfun_closed(kind, L));
}

}  // namespace tlent
