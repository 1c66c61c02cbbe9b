// Brute-force ground state of H = sum_i (1 - e_i) at loop weight 1 in the
// link-pattern basis, and the generating function it induces.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlent/combinatorics.hpp"
#include "tlent/genfun.hpp"

namespace tlent {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  int max_size = 16;
};

struct SparseEntry {
  int row;
  long value;
};

struct Hamiltonian {
  BoundaryKind kind{};
  int L = 0;
  std::vector<LinkPattern> basis;
  /// columns[c] lists the nonzero entries of column c by increasing row.
  std::vector<std::vector<SparseEntry>> columns;

  int dim() const { return static_cast<int>(basis.size()); }
  long entry(int row, int col) const;
  std::vector<long> column_sums() const;
  /// Dense copy, for small sizes and tests.
  std::vector<std::vector<long>> dense() const;
};

/// Throws BudgetExceeded when L exceeds limits.max_size.
Hamiltonian build_hamiltonian(BoundaryKind kind, int L, const OracleLimits& limits = {});

enum class KernelMethod {
  Auto,     // floating-point relaxation, rounded and verified; modular on failure
  Modular,  // elimination modulo word-size primes with rational reconstruction
};

struct GroundState {
  BoundaryKind kind{};
  int L = 0;
  std::vector<mpz_class> psi;
  mpz_class Z;
};

/// Integer kernel vector with coprime positive entries. Throws KernelError
/// if the kernel is not one-dimensional or no positive vector is found.
GroundState solve_ground_state(const Hamiltonian& h, KernelMethod method = KernelMethod::Auto);

/// Exact check of H psi = 0.
bool annihilates(const Hamiltonian& h, const std::vector<mpz_class>& psi);

/// Strong connectivity of the transition graph alpha -> e_i alpha. Together
/// with zero column sums it implies a one-dimensional kernel spanned by a
/// positive vector.
bool transition_graph_strongly_connected(const Hamiltonian& h);

/// a_k = sum of psi_alpha over patterns closing k loops against alpha_0.
GenFun genfun_from_ground_state(const Hamiltonian& h, const GroundState& gs);
GenFun genfun_oracle(BoundaryKind kind, int L, const OracleLimits& limits = {});

}  // namespace tlent
