#include "tlent/asymptotics.hpp"

#include <stdexcept>
#include <string>

#include "tlent/closedform.hpp"
#include "tlent/constants.hpp"

namespace tlent {

const char* to_string(Branch b) { return b == Branch::Low ? "low" : "high"; }

namespace {

Real frac(long bits, long num, long den) { return Real(bits, num) / den; }

// sin(pi * a * r / d)
Real sin_pi(const Real& r, long d) { return sin(pi(r.bits()) * r / d); }
Real cos_pi(const Real& r, long d) { return cos(pi(r.bits()) * r / d); }

Real rpow(long bits, long base, long num, long den) {
  return pow(Real(bits, base), frac(bits, num, den));
}

bool is_strip(BoundaryKind k) {
  return k == BoundaryKind::ReflectingEven || k == BoundaryKind::ReflectingOdd;
}

Branch branch_of(const Real& x) { return x >= Real(x.bits(), -1L) ? Branch::Low : Branch::High; }

}  // namespace

Real x_of_r(const Real& r) {
  if (!(r > Real(r.bits(), 0L)) || !(r < Real(r.bits(), 3L))) {
    throw std::domain_error("r must lie in (0, 3)");
  }
  return sin_pi(r + 1, 3) / sin_pi(r, 3);
}

RParam r_of_x(const Real& x) {
  const long bits = x.bits();
  const Real r = atan2(sqrt(Real(bits, 3L)), x * 2 - 1) * 3 / pi(bits);
  return {r, branch_of(x)};
}

Real s_minus(int j, const Real& r) {
  const long bits = r.bits();
  const Real c2 = cos_pi(r, 2);
  const Real s1 = -(frac(bits, 5, 36) * c2 * c2);
  auto c = [&](long k) { return cos(pi(bits) * r * k); };
  switch (j) {
    case 1: return s1;
    case 2: return s1 * c(1) / 2;
    case 3: return s1 * (c(2) * 221 - c(1) * 10 - 15) / 864;
    case 4: return s1 * (c(3) * 113 - c(2) * 5 - c(1) * 51 - 5) / 576;
    case 5:
      return s1 * (c(4) * 49695 - c(3) * 1758 - c(2) * 37952 - c(1) * 1826 + 225) / 248832;
    case 6:
      return s1 * (c(5) * 125920 - c(4) * 3365 - c(3) * 135990 - c(2) * 1760 + c(1) * 22102 + 1605) /
             497664;
    default: break;
  }
  throw std::domain_error("S_{-j} is available for j = 1..6, got " + std::to_string(j));
}

Real f_coeff_branch(int j, const Real& r, Branch b) {
  const long bits = r.bits();
  const Real four_over = Real(bits, 4L) / (sqrt(Real(bits, 3L)) * 3);
  const Real half_sqrt3 = sqrt(Real(bits, 3L)) / 2;
  if (j < 0 || j > kMaxFIndex) {
    throw std::domain_error("f_j is available for j = 0.." + std::to_string(kMaxFIndex));
  }
  if (b == Branch::Low) {
    switch (j) {
      case 0: {
        const Real a = sin_pi(r + 1, 6);
        const Real c = sin_pi(r + 2, 6);
        return log(four_over / tan(pi(bits) * r / 6) * a * a / (c * c));
      }
      case 1: {
        // sin(pi r/2)/sin(pi(r+1)/3) rewritten around r = 2, where both vanish.
        const Real d = r - 2;
        if (d.is_zero()) return log(half_sqrt3 * 3 / 2);
        return log(half_sqrt3 * sin_pi(d, 2) / sin_pi(d, 3));
      }
      case 2: return frac(bits, 5, 72) * (cos_pi(r, 1) + 1);
      default: return -s_minus(j - 1, r);
    }
  }
  const Real s = r - 3;
  switch (j) {
    case 0: {
      const Real a = sin_pi(r - 2, 6);
      const Real c = sin_pi(r - 1, 6);
      return log(-four_over / tan(pi(bits) * s / 6) * a * a / (c * c));
    }
    case 1: return log(-half_sqrt3 * sin_pi(s, 2) / sin_pi(r - 2, 3));
    case 2: return frac(bits, 5, 72) * (cos_pi(s, 1) + 1);
    default: return -s_minus(j - 1, s);
  }
}

Real f_coeff(int j, const Real& x) {
  const RParam p = r_of_x(x);
  return f_coeff_branch(j, p.r, p.branch);
}

Real g_coeff_branch(BoundaryKind geometry, int j, const Real& r, Branch b) {
  if (!is_strip(geometry)) throw std::invalid_argument("strip coefficients need a reflecting kind");
  if (j == 0) return f_coeff_branch(0, r, b);
  if (j != 1) throw std::domain_error("g_j has a closed form only for j = 0, 1");
  if (geometry == BoundaryKind::ReflectingEven) {
    const Real s = b == Branch::Low ? r : r - 3;
    return (1 - s * s) / 6;
  }
  const Real s = b == Branch::Low ? 1 - r : 4 - r;
  return -(s * s) / 6;
}

Real g_coeff(BoundaryKind geometry, int j, const Real& x) {
  const RParam p = r_of_x(x);
  // The even corner term switches at x = -1 inclusive.
  Branch b = p.branch;
  if (j == 1 && x == Real(x.bits(), -1L)) b = Branch::High;
  return g_coeff_branch(geometry, j, p.r, b);
}

int epsilon_sign(BoundaryKind geometry, int n, const mpq_class& x) {
  switch (geometry) {
    case BoundaryKind::PeriodicEven:
      return x < -1 && n % 2 == 0 ? -1 : 1;
    case BoundaryKind::ReflectingEven: {
      if (x == 0) return 1;
      return sgn(eval_det_at(geometry, n, x) / x);
    }
    case BoundaryKind::ReflectingOdd:
      return sgn(eval_det_at(geometry, n, x));
    case BoundaryKind::PeriodicOdd: break;
  }
  throw std::invalid_argument("no sign rule for odd periodic sizes");
}

Real affleck_ludwig_g(const Real& x) {
  if (!(x > Real(x.bits(), -1L))) throw std::domain_error("g-factor formula needs x > -1");
  const Real r = r_of_x(x).r;
  return sqrt(Real(x.bits(), 3L)) / 2 * sin_pi(r, 2) / sin_pi(r, 3);
}

ConstantTriple strip_constants(BoundaryKind geometry, SpecialPoint x, long bits) {
  if (!is_strip(geometry)) throw std::invalid_argument("strip constants need a reflecting kind");
  const Real s3 = sqrt(Real(bits, 3L));
  const Real p = pi(bits);
  const Real A = glaisher(bits);
  const Real g3 = gamma_third(bits);
  const Real g6 = gamma_sixth(bits);
  const Real half = frac(bits, 1, 2);
  const Real c24 = frac(bits, 1, 24);
  const bool even = geometry == BoundaryKind::ReflectingEven;
  switch (x) {
    case SpecialPoint::MinusOne: {
      const Real g0 = log(Real(bits, 2L) / (s3 * 3));
      if (even) {
        return {g0, frac(bits, 1, 8),
                c24 + log(rpow(bits, 3, 11, 24) * g3 / (rpow(bits, 2, 1, 18) * pow(p * A, half)))};
      }
      return {g0, frac(bits, -3, 8),
              c24 + log(rpow(bits, 2, 25, 9) * p / (rpow(bits, 3, 25, 24) * g3 * g3 * pow(A, half)))};
    }
    case SpecialPoint::Zero: {
      const Real g0 = log(frac(bits, 16, 27));
      if (even) return {g0, frac(bits, -1, 2), log(Real(bits, 3L) / sqrt(p * 2))};
      return {g0, frac(bits, -1, 6),
              log(rpow(bits, 2, 17, 6) * sqrt(p) / (rpow(bits, 3, 3, 2) * g3))};
    }
    case SpecialPoint::Two: {
      const Real g0 = log(Real(bits, 8L) / (s3 * 3));
      if (even) {
        return {g0, frac(bits, 1, 8),
                frac(bits, -3, 8) +
                    log(g3 / (rpow(bits, 3, 1, 24) * rpow(bits, 2, 1, 18) * pow(p * A, half)))};
      }
      return {g0, frac(bits, -1, 24),
              c24 + log(rpow(bits, 2, 16, 9) / (rpow(bits, 3, 25, 24) * pow(A, half)))};
    }
    case SpecialPoint::Half: {
      const Real g0 = log(Real(bits, 4L) / (s3 * 3));
      if (even) {
        return {g0, frac(bits, -5, 24),
                c24 + log(rpow(bits, 2, 7, 9) * pow(p, frac(bits, 1, 4)) /
                          (rpow(bits, 3, 7, 24) * pow(A * g6, half)))};
      }
      return {g0, frac(bits, -1, 24),
              c24 + log(rpow(bits, 2, 16, 9) / (rpow(bits, 3, 25, 24) * pow(A, half)))};
    }
    default: break;
  }
  throw std::domain_error("strip constants are tabulated at x = -1, 0, 1/2, 2 only");
}

}  // namespace tlent
