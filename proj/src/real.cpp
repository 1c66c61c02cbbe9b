#include "tlent/real.hpp"

#include <stdexcept>
#include <vector>

namespace tlent {

Real::Real(long bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long bits, long v) : Real(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long bits, double v) : Real(bits) { mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(long bits, const mpz_class& v) : Real(bits) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }
Real::Real(long bits, const mpq_class& v) : Real(bits) { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }

Real::Real(long bits, const std::string& decimal) : Real(bits) {
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_)) {
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

namespace {

void widen(Real& a, const Real& b) {
  if (b.bits() > a.bits()) mpfr_prec_round(a.get(), b.bits(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real pi(long bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

#define TLENT_UNARY(name, fn)                  \
  Real name(const Real& a) {                   \
    Real r(a.bits());                          \
    fn(r.get(), a.get(), MPFR_RNDN);           \
    return r;                                  \
  }

TLENT_UNARY(abs, mpfr_abs)
TLENT_UNARY(sqrt, mpfr_sqrt)
TLENT_UNARY(log, mpfr_log)
TLENT_UNARY(exp, mpfr_exp)
TLENT_UNARY(sin, mpfr_sin)
TLENT_UNARY(cos, mpfr_cos)
TLENT_UNARY(tan, mpfr_tan)
TLENT_UNARY(gamma, mpfr_gamma)

#undef TLENT_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.bits(), x.bits()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& a, const Real& b) {
  Real r(std::max(a.bits(), b.bits()));
  mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real log_abs(const mpz_class& z, long bits) {
  if (z == 0) throw std::domain_error("log of zero");
  // Leading limbs carry all the information needed at `bits` precision.
  Real r(bits + 64, mpz_class(abs(z)));
  Real out(bits);
  mpfr_log(out.get(), r.get(), MPFR_RNDN);
  return out;
}

Real log_abs(const mpq_class& q, long bits) {
  if (q == 0) throw std::domain_error("log of zero");
  Real r(bits + 64, mpq_class(abs(q)));
  Real out(bits);
  mpfr_log(out.get(), r.get(), MPFR_RNDN);
  return out;
}

}  // namespace tlent
