#include "tlent/constants.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <string>

namespace tlent {

namespace {

const char* const kGlaisher =
    "1.28242712910062263687534256886979172776768892732500119206374002174040630885882646112973649"
    "19582023743942064612039900074893315779136277528040415907257386172752214334327143439787335067"
    "91525736685690787656114668644999778496275451817431239465276128213808180219264516851546143919"
    "90108357373070350490388812341881367497813305093770833682222494115874837348064399978830070125"
    "5670012869941577054320539275854058";

Real third(long bits) { return Real(bits, 1L) / 3; }


// log(1^1 2^2 ... N^N) = (N^2/2 + N/2 + 1/12) log N - N^2/4 + log A
//                        - sum_{j>=2} B_{2j} / ((2j)(2j-1)(2j-2) N^{2j-2})
// The smallest term is about exp(-2 pi N), so N grows with the precision.
// |B_{2j}| = 2 (2j)! zeta(2j) / (2 pi)^{2j}.
Real glaisher_uncached(long bits) {
  const long w = bits + 32;
  const long N = std::max(100L, w / 8 + 10);
  Real log_a(w);
  for (long k = 2; k <= N; ++k) log_a += Real(w, k) * log(Real(w, k));
  const Real n(w, N);
  log_a -= (n * n / 2 + n / 2 + Real(w, 1L) / 12) * log(n) - n * n / 4;
  const Real eps = pow(Real(w, 2L), Real(w, -w));
  const Real two_pi_n = pi(w) * 2 * n;
  // ratio = 2 (2j)! / ((2 pi)^{2j} N^{2j-2}), updated in j.
  Real ratio = Real(w, 2L) * 24 * n * n / pow(two_pi_n, Real(w, 4L));
  Real zeta(w);
  for (long j = 2;; ++j) {
    if (j > 2) ratio = ratio * ((2 * j - 1) * (2 * j)) / (two_pi_n * two_pi_n);
    mpfr_zeta_ui(zeta.get(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
    Real term = ratio * zeta / ((2 * j) * (2 * j - 1) * (2 * j - 2));
    if (j % 2 == 0) term = -term;
    log_a += term;
    if (abs(term) < eps) break;
  }
  Real a = exp(log_a);
  mpfr_prec_round(a.get(), bits, MPFR_RNDN);
  return a;
}

}  // namespace

Real glaisher(long bits) {
  static std::mutex mu;
  static std::map<long, Real> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(bits);
  if (it == memo.end()) it = memo.emplace(bits, glaisher_uncached(bits)).first;
  return it->second;
}

Real gamma_third(long bits) { return gamma(third(bits)); }

Real gamma_sixth(long bits) { return gamma(Real(bits, 1L) / 6); }

bool ConstantSelfTest::ok(const Real& tol) const {
  const Real literal_tol = max(tol, Real(tol.bits(), std::string("1e-395")));
  return abs(reflection_third) < tol && abs(reflection_sixth) < tol && abs(glaisher_literal) < literal_tol;
}

ConstantSelfTest self_test_constants(long bits) {
  const Real two_pi = pi(bits) * 2;
  ConstantSelfTest t{Real(bits), Real(bits), Real(bits)};
  t.reflection_third = gamma_third(bits) * gamma(Real(bits, 2L) / 3) - two_pi / sqrt(Real(bits, 3L));
  t.reflection_sixth = gamma_sixth(bits) * gamma(Real(bits, 5L) / 6) - two_pi;

  t.glaisher_literal = glaisher(bits) - Real(bits, std::string(kGlaisher));
  return t;
}

}  // namespace tlent
