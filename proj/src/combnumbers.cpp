#include "tlent/combnumbers.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tlent {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::ARefined: return "A_refined";
    case Family::AV: return "AV";
    case Family::C: return "C";
    case Family::AVH: return "AVH";
    case Family::AHT: return "AHT";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::A, Family::ARefined, Family::AV, Family::C, Family::AVH, Family::AHT}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

const mpz_class& factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  static std::mutex mu;
  static std::deque<mpz_class> table{mpz_class(1)};
  std::lock_guard lock(mu);
  while (static_cast<long>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[static_cast<std::size_t>(n)];
}

mpz_class binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

mpz_class to_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
  return q.get_num();
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace

mpz_class asm_count(long n) {
  require(n >= 0, "A_n needs n >= 0");
  mpq_class p = 1;
  for (long j = 0; j < n; ++j) p *= ratio(factorial(3 * j + 1), factorial(n + j));
  return to_integer(p, "A_n");
}

mpz_class asm_refined(long n, long k) {
  require(n >= 1 && k >= 1 && k <= n, "A_{n,k} needs 1 <= k <= n");
  const mpq_class p =
      ratio(binom(n + k - 2, k - 1) * factorial(2 * n - k - 1) * factorial(n - 1) * asm_count(n - 1),
            factorial(n - k) * factorial(2 * n - 2));
  return to_integer(p, "A_{n,k}");
}

mpz_class asm_vertical(long m) {
  require(m >= 1 && m % 2 == 1, "AV_m needs odd m");
  const long n = (m - 1) / 2;
  mpq_class p = 1;
  for (long j = 0; j < n; ++j) {
    p *= ratio((3 * j + 2) * factorial(6 * j + 3) * factorial(2 * j + 1),
                   factorial(4 * j + 3) * factorial(4 * j + 2));
  }
  return to_integer(p, "AV_m");
}

mpz_class cstc_plane_partitions(long m) {
  require(m >= 0 && m % 2 == 0, "C_m needs even m");
  const long n = m / 2;
  mpq_class p = 1;
  for (long j = 0; j < n; ++j) {
    p *= ratio((3 * j + 1) * factorial(6 * j) * factorial(2 * j),
                   factorial(4 * j) * factorial(4 * j + 1));
  }
  return to_integer(p, "C_m");
}

mpz_class asm_vertical_horizontal(long m) {
  require(m >= 1 && m % 2 == 1, "AVH_m needs odd m");
  const long n = (m - 1) / 2;
  return asm_vertical(2 * (n / 2) + 1) * cstc_plane_partitions(2 * ((n + 1) / 2));
}

mpz_class asm_half_turn(long m) {
  require(m >= 0, "AHT_m needs m >= 0");
  const long n = m / 2;
  mpq_class p = 1;
  if (m % 2 == 0) {
    for (long j = 0; j < n; ++j) {
      const mpz_class d = factorial(n + j);
      p *= ratio(factorial(3 * j) * factorial(3 * j + 2), d * d);
    }
  } else {
    p = ratio(factorial(n), factorial(3 * n + 2));
    for (long j = 0; j <= n; ++j) {
      const mpz_class d = factorial(n + j);
      p *= ratio(factorial(3 * j) * factorial(3 * j + 2), d * d);
    }
  }
  return to_integer(p, "AHT_m");
}

mpz_class comb_number(Family f, long index, long k) {
  switch (f) {
    case Family::A: return asm_count(index);
    case Family::ARefined: return asm_refined(index, k);
    case Family::AV: return asm_vertical(index);
    case Family::C: return cstc_plane_partitions(index);
    case Family::AVH: return asm_vertical_horizontal(index);
    case Family::AHT: return asm_half_turn(index);
  }
  throw std::domain_error("unknown family");
}

}  // namespace tlent
