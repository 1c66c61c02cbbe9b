#include "tlent/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tlent/modular_kernel.hpp"

namespace tlent {

long Hamiltonian::entry(int row, int col) const {
  for (const auto& e : columns[col]) {
    if (e.row == row) return e.value;
  }
  return 0;
}

std::vector<long> Hamiltonian::column_sums() const {
  std::vector<long> out;
  out.reserve(columns.size());
  for (const auto& col : columns) {
    long s = 0;
    for (const auto& e : col) s += e.value;
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<long>> Hamiltonian::dense() const {
  std::vector<std::vector<long>> m(dim(), std::vector<long>(dim(), 0));
  for (int c = 0; c < dim(); ++c) {
    for (const auto& e : columns[c]) m[e.row][c] = e.value;
  }
  return m;
}

Hamiltonian build_hamiltonian(BoundaryKind kind, int L, const OracleLimits& limits) {
  validate_size(kind, L);
  if (L > limits.max_size) {
    throw BudgetExceeded("size " + std::to_string(L) + " exceeds the oracle cap " +
                         std::to_string(limits.max_size));
  }
  Hamiltonian h{kind, L, enumerate_link_patterns(kind, L), {}};
  std::map<std::vector<int>, int> index;
  for (int c = 0; c < h.dim(); ++c) {
    const auto p = h.basis[c].pairing();
    index.emplace(std::vector<int>(p.begin(), p.end()), c);
  }
  const int gens = generator_count(kind, L);
  h.columns.resize(h.basis.size());
  for (int c = 0; c < h.dim(); ++c) {
    std::map<int, long> col;
    col[c] += gens;
    for (int i = 1; i <= gens; ++i) {
      const auto action = apply_ei(h.basis[c], i);
      const auto image = action.pattern.pairing();
      const auto it = index.find(std::vector<int>(image.begin(), image.end()));
      if (it == index.end()) throw std::logic_error("generator image missing from the basis");
      col[it->second] -= 1;
    }
    for (const auto& [row, v] : col) {
      if (v != 0) h.columns[c].push_back({row, v});
    }
  }
  return h;
}

bool annihilates(const Hamiltonian& h, const std::vector<mpz_class>& psi) {
  if (static_cast<int>(psi.size()) != h.dim()) return false;
  std::vector<mpz_class> out(h.dim(), 0);
  for (int c = 0; c < h.dim(); ++c) {
    for (const auto& e : h.columns[c]) out[e.row] += e.value * psi[c];
  }
  return std::all_of(out.begin(), out.end(), [](const mpz_class& v) { return v == 0; });
}

bool transition_graph_strongly_connected(const Hamiltonian& h) {
  const int n = h.dim();
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int c = 0; c < n; ++c) {
    for (const auto& e : h.columns[c]) {
      if (e.row == c) continue;
      fwd[c].push_back(e.row);
      bwd[e.row].push_back(c);
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<int>>& g) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

namespace {

bool positive(const std::vector<mpz_class>& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x > 0; });
}

struct RelaxationSystem {
  std::vector<std::vector<std::pair<int, double>>> rows;  // off-diagonal entries, negated
  std::vector<double> diag;
};

RelaxationSystem relaxation_system(const Hamiltonian& h) {
  RelaxationSystem sys{std::vector<std::vector<std::pair<int, double>>>(h.dim()), std::vector<double>(h.dim(), 0.0)};
  for (int c = 0; c < h.dim(); ++c) {
    for (const auto& e : h.columns[c]) {
      if (e.row == c) sys.diag[c] = static_cast<double>(e.value);
      else sys.rows[e.row].emplace_back(c, -static_cast<double>(e.value));
    }
  }
  return sys;
}

// Gauss-Seidel sweeps for H d = b. The system is singular, so d converges
// to some solution; the kernel component is left to the caller.
void gauss_seidel(const RelaxationSystem& sys, const std::vector<double>& b, std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  for (int sweep = 0; sweep < 200000; ++sweep) {
    double change = 0, size = 0;
    for (int r = 0; r < n; ++r) {
      double s = b[r];
      for (const auto& [c, w] : sys.rows[r]) s += w * d[c];
      const double next = s / sys.diag[r];
      change = std::max(change, std::abs(next - d[r]));
      size = std::max(size, std::abs(next));
      d[r] = next;
    }
    if (change <= 1e-14 * size && sweep > 10) return;
  }
}

// Stationary vector of the master equation by Gauss-Seidel sweeps with the
// smallest entry scaled to one, rounded, then corrected in exact arithmetic
// until H psi = 0. Empty when the pinned solution is not integral.
std::vector<mpz_class> relaxed_solution(const Hamiltonian& h) {
  const int n = h.dim();
  const RelaxationSystem sys = relaxation_system(h);
  if (std::any_of(sys.diag.begin(), sys.diag.end(), [](double d) { return d <= 0; })) return {};
  std::vector<double> psi(n, 1.0);
  for (int sweep = 0; sweep < 200000; ++sweep) {
    double change = 0;
    for (int r = 0; r < n; ++r) {
      double s = 0;
      for (const auto& [c, w] : sys.rows[r]) s += w * psi[c];
      const double next = s / sys.diag[r];
      change = std::max(change, std::abs(next - psi[r]) / std::abs(next));
      psi[r] = next;
    }
    const double lo = *std::min_element(psi.begin(), psi.end());
    if (!(lo > 0)) return {};
    for (double& v : psi) v /= lo;
    if (change < 1e-15 && sweep > 10) break;
  }
  const int pin = static_cast<int>(std::min_element(psi.begin(), psi.end()) - psi.begin());

  std::vector<mpz_class> out(n);
  for (int i = 0; i < n; ++i) out[i] = mpz_class(std::nearbyint(psi[i]));
  out[pin] = 1;
  std::vector<mpz_class> res(n);
  std::vector<double> rhs(n), delta(n);
  for (int round = 0; round < 30; ++round) {
    std::fill(res.begin(), res.end(), 0);
    for (int c = 0; c < n; ++c) {
      for (const auto& e : h.columns[c]) res[e.row] += e.value * out[c];
    }
    if (std::all_of(res.begin(), res.end(), [](const mpz_class& v) { return v == 0; })) return out;
    for (int i = 0; i < n; ++i) rhs[i] = -res[i].get_d();
    std::fill(delta.begin(), delta.end(), 0.0);
    gauss_seidel(sys, rhs, delta);
    const double shift = delta[pin];
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      const double step = std::nearbyint(delta[i] - shift * psi[i]);
      if (step != 0) {
        out[i] += mpz_class(step);
        moved = true;
      }
    }
    if (!moved) return {};
  }
  return {};
}

}  // namespace

GroundState solve_ground_state(const Hamiltonian& h, KernelMethod method) {
  const auto sums = h.column_sums();
  if (std::any_of(sums.begin(), sums.end(), [](long s) { return s != 0; })) {
    throw KernelError("column sums of the Hamiltonian do not vanish");
  }
  GroundState gs{h.kind, h.L, {}, 0};
  if (h.dim() == 1) {
    gs.psi = {mpz_class(1)};
  } else {
    if (method == KernelMethod::Auto && transition_graph_strongly_connected(h)) {
      auto guess = relaxed_solution(h);
      if (!guess.empty() && annihilates(h, guess)) gs.psi = std::move(guess);
    }
    if (gs.psi.empty()) {
      gs.psi = integer_kernel_modular(h.columns, [&](const std::vector<mpz_class>& v) {
        return positive(v) && annihilates(h, v);
      });
    }
  }
  mpz_class g = 0;
  for (const auto& v : gs.psi) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1 || !positive(gs.psi)) throw KernelError("ground state is not a primitive positive vector");
  for (const auto& v : gs.psi) gs.Z += v;
  return gs;
}

GenFun genfun_from_ground_state(const Hamiltonian& h, const GroundState& gs) {
  GenFun g{h.kind, h.L, std::vector<mpz_class>(static_cast<std::size_t>(h.L / 2) + 1, 0), gs.Z};
  for (int c = 0; c < h.dim(); ++c) g.coeffs[closed_loops_with_small_arcs(h.basis[c])] += gs.psi[c];
  return g;
}

GenFun genfun_oracle(BoundaryKind kind, int L, const OracleLimits& limits) {
  const Hamiltonian h = build_hamiltonian(kind, L, limits);
  return genfun_from_ground_state(h, solve_ground_state(h));
}

}  // namespace tlent
