#include "tlent/genfun.hpp"

#include <cctype>
#include <stdexcept>

namespace tlent {

bool GenFun::normalised() const {
  mpz_class s = 0;
  for (const auto& a : coeffs) s += a;
  return s == Z;
}

mpq_class GenFun::eval_unnormalised(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class GenFun::eval(const mpq_class& x) const {
  mpq_class r = eval_unnormalised(x) / Z;
  return r;
}

mpq_class GenFun::eval_tilde(const mpq_class& x) const {
  if (L % 2) return eval(x);
  if (x == 0) return mpq_class(coeffs.size() > 1 ? coeffs[1] : mpz_class(0)) / Z;
  return eval(x) / x;
}

std::string GenFun::polynomial() const {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const mpz_class& a = coeffs[k];
    if (a == 0) continue;
    const bool neg = a < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const mpz_class mag = abs(a);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

mpq_class eval_genfun(const GenFun& g, const mpq_class& x) { return g.eval(x); }

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto bad = [&] { return std::invalid_argument("not an exact rational: '" + text + "'"); };
  if (s.empty()) throw bad();
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    if (s[pos] == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos];
      if (seen_point) ++frac_digits;
    } else {
      throw bad();
    }
  }
  if (digits.empty()) throw bad();
  long exponent = 0;
  if (pos < s.size()) {
    const std::string e = s.substr(pos + 1);
    if (e.empty()) throw bad();
    std::size_t used = 0;
    try {
      exponent = std::stol(e, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != e.size()) throw bad();
  }
  mpz_class num(digits, 10);
  if (neg) num = -num;
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace tlent
