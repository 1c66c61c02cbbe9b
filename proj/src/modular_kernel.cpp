#include "tlent/modular_kernel.hpp"

#include <algorithm>
#include <string>

namespace tlent {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

std::vector<std::uint32_t> word_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = (1u << 31) - 1; out.size() < count; c -= 2) {
    if (is_prime(c)) out.push_back(c);
  }
  return out;
}

ModKernel kernel_mod_p(const std::vector<std::vector<SparseEntry>>& columns, std::uint32_t p) {
  const int n = static_cast<int>(columns.size());
  std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(n, 0));
  for (int c = 0; c < n; ++c) {
    for (const auto& e : columns[c]) a[e.row][c] = reduce(e.value, p);
  }
  std::vector<int> pivot_col;
  std::vector<int> nz;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    auto& row = a[r];
    const std::uint64_t inv = inv_mod(row[c], p);
    nz.clear();
    for (int j = c; j < n; ++j) {
      if (row[j]) {
        row[j] = static_cast<std::uint32_t>(row[j] * inv % p);
        nz.push_back(j);
      }
    }
    for (int i = r + 1; i < n; ++i) {
      auto& other = a[i];
      const std::uint64_t f = other[c];
      if (f == 0) continue;
      const std::uint64_t g = p - f;
      for (int j : nz) other[j] = static_cast<std::uint32_t>((other[j] + g * row[j]) % p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  ModKernel out;
  out.rank = r;
  if (r != n - 1) return out;
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  const int free_col = static_cast<int>(std::find(is_pivot.begin(), is_pivot.end(), 0) - is_pivot.begin());
  std::vector<std::uint32_t> v(n, 0);
  v[free_col] = 1;
  for (int i = r - 1; i >= 0; --i) {
    const int pc = pivot_col[i];
    std::uint64_t s = 0;
    for (int j = pc + 1; j < n; ++j) {
      if (a[i][j] && v[j]) s = (s + static_cast<std::uint64_t>(a[i][j]) * v[j]) % p;
    }
    v[pc] = static_cast<std::uint32_t>((p - s) % p);
  }
  out.vector = std::move(v);
  return out;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = ((a % m) + m) % m;
  mpz_class s0 = 0, s1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

std::vector<mpz_class> integer_kernel_modular(
    const std::vector<std::vector<SparseEntry>>& columns,
    const std::function<bool(const std::vector<mpz_class>&)>& accept) {
  const std::size_t n = columns.size();
  const auto primes = word_primes(64);
  std::vector<mpz_class> residue(n, 0);
  mpz_class modulus = 1;
  int deficient = 0;
  for (std::uint32_t p : primes) {
    const ModKernel k = kernel_mod_p(columns, p);
    if (k.rank < static_cast<int>(n) - 1) {
      if (++deficient >= 3) {
        throw KernelError("kernel has dimension " + std::to_string(n - k.rank) + " modulo " +
                          std::to_string(p));
      }
      continue;
    }
    if (k.rank == static_cast<int>(n)) throw KernelError("matrix is nonsingular");
    if (k.vector[0] == 0) continue;
    // Scale so the first component is 1, a choice independent of the prime.
    const std::uint64_t s = inv_mod(k.vector[0], p);
    const mpz_class mp(static_cast<unsigned long>(p));
    mpz_class inv_m;
    mpz_invert(inv_m.get_mpz_t(), modulus.get_mpz_t(), mp.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned long vi = static_cast<unsigned long>(k.vector[i] * s % p);
      // residue + modulus * ((vi - residue) * inv_m mod p)
      mpz_class t = (mpz_class(vi) - residue[i]) * inv_m;
      t %= mp;
      if (t < 0) t += mp;
      residue[i] += modulus * t;
    }
    modulus *= mp;
    std::vector<mpq_class> frac(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto q = rational_reconstruct(residue[i], modulus);
      if (!q) ok = false;
      else frac[i] = *q;
    }
    if (!ok) continue;
    mpz_class den = 1;
    for (const auto& q : frac) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> v(n);
    mpz_class g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = frac[i].get_num() * (den / frac[i].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (g == 0) continue;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    const auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
    if (first != v.end() && *first < 0) {
      for (auto& x : v) x = -x;
    }
    if (accept(v)) return v;
  }
  throw KernelError("modular kernel did not stabilise");
}

}  // namespace tlent
