// Arbitrary-precision binary floating point on top of MPFR. Every value owns
// its precision; binary operations round to the larger of the two.
#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace tlent {

inline constexpr long kDefaultBits = 512;

class Real {
 public:
  explicit Real(long bits = kDefaultBits);
  Real(long bits, long v);
  Real(long bits, double v);
  Real(long bits, const mpz_class& v);
  Real(long bits, const mpq_class& v);
  /// Decimal string, e.g. "-1.25e-3".
  Real(long bits, const std::string& decimal);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 40) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += Real(a.bits(), b); }
  friend Real operator-(Real a, long b) { return a -= Real(a.bits(), b); }
  friend Real operator*(Real a, long b) { return a *= Real(a.bits(), b); }
  friend Real operator/(Real a, long b) { return a /= Real(a.bits(), b); }
  friend Real operator+(long a, const Real& b) { return Real(b.bits(), a) += b; }
  friend Real operator-(long a, const Real& b) { return Real(b.bits(), a) -= b; }
  friend Real operator*(long a, const Real& b) { return Real(b.bits(), a) *= b; }
  friend Real operator/(long a, const Real& b) { return Real(b.bits(), a) /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

Real pi(long bits);
Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real tan(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& a, const Real& b);
Real gamma(const Real& a);
/// log|q| for a nonzero rational, exact up to the final rounding.
Real log_abs(const mpq_class& q, long bits);
Real log_abs(const mpz_class& z, long bits);
Real max(const Real& a, const Real& b);

}  // namespace tlent
