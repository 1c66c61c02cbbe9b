// Exact one-dimensional kernels of sparse integer matrices by elimination
// modulo primes, Chinese remaindering and rational reconstruction.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tlent/groundstate.hpp"

namespace tlent {

/// Largest primes below 2^31, in decreasing order.
std::vector<std::uint32_t> word_primes(std::size_t count);

struct ModKernel {
  int rank = 0;
  std::vector<std::uint32_t> vector;  // valid only when rank == dim-1
};

/// Rank and kernel vector of a square matrix modulo p, columns given sparsely.
ModKernel kernel_mod_p(const std::vector<std::vector<SparseEntry>>& columns, std::uint32_t p);

/// r/s with |r|, s <= sqrt(m/2) and r = a s mod m, if one exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

/// Primitive integer kernel vector, first nonzero entry positive. `accept`
/// is consulted on each candidate. Throws KernelError if the rank is below
/// dim-1 modulo several primes.
std::vector<mpz_class> integer_kernel_modular(
    const std::vector<std::vector<SparseEntry>>& columns,
    const std::function<bool(const std::vector<mpz_class>&)>& accept);

}  // namespace tlent
