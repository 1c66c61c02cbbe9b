#include "tlent/fitter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "tlent/closedform.hpp"
#include "tlent/genfun.hpp"
#include "tlent/groundstate.hpp"
#include "tlent/parallel.hpp"
#include "tlent/plot.hpp"

namespace tlent {

namespace {

constexpr int kMaxPeriodicN = 1000;
constexpr int kMaxReflectingN = 200;

}  // namespace

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::All: return "all";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
  }
  return "all";
}

Parity parse_parity(std::string_view s) {
  if (s == "all") return Parity::All;
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be all, even or odd, got '" + std::string(s) + "'");
}

bool admits(Parity p, int n) {
  switch (p) {
    case Parity::All: return true;
    case Parity::Even: return n % 2 == 0;
    case Parity::Odd: return n % 2 != 0;
  }
  return true;
}

SampleSeries collect_series(BoundaryKind geometry, const mpq_class& x, int n_min, int n_max,
                            const CollectOptions& opts) {
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("size range must satisfy 1 <= n_min <= n_max");
  }
  const mpq_class dist = abs(x + 1);
  if (opts.parity == Parity::All && dist <= mpq_class(1, 10)) {
    throw std::invalid_argument("near x = -1 the series needs an explicit parity");
  }
  std::vector<int> sizes;
  for (int n = n_min; n <= n_max; ++n) {
    if (admits(opts.parity, n)) sizes.push_back(n);
  }
  if (sizes.empty()) throw std::invalid_argument("the parity filter leaves no sizes");

  const auto point = special_point(x);
  auto fast_value = [&](int n) -> std::optional<mpq_class> {
    if (!opts.fast_path || !point) return std::nullopt;
    const auto v = special_value(geometry, n, *point);
    if (!v) return std::nullopt;
    return v->tilde(geometry, *point);
  };

  std::vector<mpq_class> values(sizes.size());
  switch (geometry) {
    case BoundaryKind::PeriodicEven:
      if (n_max > kMaxPeriodicN) {
        throw BudgetExceeded("cylinder sizes are evaluated up to n = " + std::to_string(kMaxPeriodicN));
      }
      parallel_for(sizes.size(), opts.jobs, [&](std::size_t i) {
        const auto fast = fast_value(sizes[i]);
        values[i] = fast ? *fast : per_even_tilde(sizes[i], x);
      });
      break;
    case BoundaryKind::PeriodicOdd: {
      if (2 * n_max + 1 > opts.oracle_max_size) {
        throw BudgetExceeded("odd cylinder sizes need the oracle, capped at L = " +
                             std::to_string(opts.oracle_max_size));
      }
      OracleLimits limits;
      limits.max_size = opts.oracle_max_size;
      parallel_for(sizes.size(), opts.jobs, [&](std::size_t i) {
        values[i] = genfun_oracle(geometry, 2 * sizes[i] + 1, limits).eval_tilde(x);
      });
      break;
    }
    case BoundaryKind::ReflectingEven:
    case BoundaryKind::ReflectingOdd: {
      if (n_max > kMaxReflectingN) {
        throw BudgetExceeded("strip sizes are evaluated up to n = " + std::to_string(kMaxReflectingN));
      }
      const bool even = geometry == BoundaryKind::ReflectingEven;
      std::vector<char> done(sizes.size(), 0);
      bool need_det = false;
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (auto fast = fast_value(sizes[i])) {
          values[i] = *fast;
          done[i] = 1;
        } else if (even && x == 0) {
          values[i] = refl_even_linear_coeff(sizes[i]);
          done[i] = 1;
        } else {
          need_det = true;
        }
      }
      if (need_det) {
        const auto all = eval_det_range(geometry, n_max, x);
        for (std::size_t i = 0; i < sizes.size(); ++i) {
          if (done[i]) continue;
          values[i] = all[sizes[i] - 1];
          if (even) values[i] /= x;
        }
      }
      break;
    }
  }

  SampleSeries s{geometry, x, opts.parity, 0, {}, {}, {}};
  std::size_t digits = 0;
  for (const auto& v : values) {
    digits = std::max({digits, mpz_sizeinbase(v.get_num_mpz_t(), 10), mpz_sizeinbase(v.get_den_mpz_t(), 10)});
  }
  s.bits = std::max({opts.bits, kDefaultBits, static_cast<long>(4 * digits)});
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    const int sign = sgn(values[i]);
    if (sign == 0) {
      s.zeros.push_back(n);
      continue;
    }
    if (geometry == BoundaryKind::PeriodicEven && sign != epsilon_sign(geometry, n, x)) {
      s.sign_mismatches.push_back(n);
    }
    s.entries.push_back({n, sign, log_abs(values[i], s.bits)});
  }
  return s;
}

Real BasisFunction::eval(int n, long bits) const {
  if (log) return tlent::log(Real(bits, static_cast<long>(n)));
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0) return Real(bits, p);
  return Real(bits, mpq_class(mpz_class(1), p));
}

std::string BasisFunction::name() const {
  if (log) return "log n";
  if (exponent == 0) return "1";
  if (exponent == 1) return "n";
  return "n^" + std::to_string(exponent);
}

BasisSpec make_basis(BoundaryKind geometry, int terms) {
  const bool strip = !is_periodic(geometry);
  if (terms < (strip ? 3 : 2)) throw std::invalid_argument("basis needs at least n, 1 (and log n on the strip)");
  BasisSpec b{{false, 1}};
  if (strip) b.push_back({true, 0});
  for (int e = 0; static_cast<int>(b.size()) < terms; --e) b.push_back({false, e});
  return b;
}

BasisSpec default_basis(BoundaryKind geometry) { return make_basis(geometry, is_periodic(geometry) ? 6 : 5); }

void validate_basis(const BasisSpec& basis, BoundaryKind geometry) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i] == basis[j]) throw std::invalid_argument("basis function " + basis[i].name() + " repeats");
    }
  }
  auto has = [&](BasisFunction f) { return std::find(basis.begin(), basis.end(), f) != basis.end(); };
  if (!has({false, 1}) || !has({false, 0})) throw std::invalid_argument("basis must contain n and 1");
  if (has({true, 0}) == is_periodic(geometry)) {
    throw std::invalid_argument("log n belongs in the basis exactly for reflecting kinds");
  }
}

const CoefficientFit& FitReport::coeff(std::string_view name) const {
  for (const auto& c : coeffs) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no fitted coefficient named '" + std::string(name) + "'");
}

CoefficientFit& FitReport::coeff(std::string_view name) {
  return const_cast<CoefficientFit&>(static_cast<const FitReport&>(*this).coeff(name));
}

namespace {

// Gaussian elimination with partial pivoting; a is consumed.
std::vector<Real> solve_square(std::vector<std::vector<Real>> a, std::vector<Real> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    if (a[piv][col].is_zero()) throw std::invalid_argument("singular fit system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      if (a[r][col].is_zero()) continue;
      const Real f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Real> x(m, Real(b[0].bits()));
  for (std::size_t i = m; i-- > 0;) {
    Real s = b[i];
    for (std::size_t c = i + 1; c < m; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

std::vector<Real> solve_window(const SampleSeries& s, const BasisSpec& basis, std::size_t start,
                               std::size_t window) {
  const std::size_t m = basis.size();
  std::vector<std::vector<Real>> rows(window, std::vector<Real>(m, Real(s.bits)));
  std::vector<Real> rhs(window, Real(s.bits));
  for (std::size_t i = 0; i < window; ++i) {
    const auto& e = s.entries[start + i];
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = basis[j].eval(e.n, s.bits);
    rhs[i] = e.log_abs;
  }
  if (window == m) return solve_square(std::move(rows), std::move(rhs));
  std::vector<std::vector<Real>> normal(m, std::vector<Real>(m, Real(s.bits, 0L)));
  std::vector<Real> proj(m, Real(s.bits, 0L));
  for (std::size_t i = 0; i < window; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      proj[j] += rows[i][j] * rhs[i];
      for (std::size_t k = 0; k < m; ++k) normal[j][k] += rows[i][j] * rows[i][k];
    }
  }
  return solve_square(std::move(normal), std::move(proj));
}

std::optional<Real> finite_or_empty(const std::function<Real()>& f) {
  try {
    Real v = f();
    if (v.is_finite()) return v;
  } catch (const std::domain_error&) {
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

void set_target(CoefficientFit& c, const std::optional<Real>& t) {
  c.target = t;
  if (t) c.deviation = abs(c.value - *t);
}

}  // namespace

FitReport fit_expansion(const SampleSeries& s, const BasisSpec& basis, int window) {
  const std::size_t m = basis.size();
  if (m < 2) throw std::invalid_argument("basis needs at least two functions");
  if (window == 0) window = static_cast<int>(m);
  if (window < static_cast<int>(m)) throw std::invalid_argument("window is smaller than the basis");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (basis[i] == basis[j]) throw std::invalid_argument("basis function " + basis[i].name() + " repeats");
    }
  }
  const std::size_t w = static_cast<std::size_t>(window);
  if (s.entries.size() < w + 2) {
    throw std::invalid_argument("series has " + std::to_string(s.entries.size()) + " sizes; window " +
                                std::to_string(window) + " needs at least " + std::to_string(w + 2));
  }
  for (std::size_t i = 1; i < s.entries.size(); ++i) {
    if (s.entries[i].n <= s.entries[i - 1].n) throw std::invalid_argument("series sizes must increase");
  }
  const std::size_t last = s.entries.size() - w;
  std::vector<std::vector<Real>> sols;
  for (std::size_t start = last - 2; start <= last; ++start) sols.push_back(solve_window(s, basis, start, w));

  FitReport rep;
  rep.geometry = s.geometry;
  rep.x = s.x;
  rep.parity = s.parity;
  rep.window = window;
  rep.least_squares = w > m;
  rep.n_min = s.entries.front().n;
  rep.n_max = s.entries.back().n;
  rep.window_n_min = s.entries[last].n;
  for (std::size_t j = 0; j < m; ++j) {
    Real lo = sols[0][j], hi = sols[0][j];
    for (const auto& sol : sols) {
      if (sol[j] < lo) lo = sol[j];
      if (sol[j] > hi) hi = sol[j];
    }
    rep.coeffs.push_back({basis[j].name(), sols.back()[j], hi - lo, std::nullopt, std::nullopt});
  }
  return rep;
}

namespace {

long report_bits(const FitReport& r) { return r.coeffs.empty() ? kDefaultBits : r.coeffs.front().value.bits(); }

// Index j of f_j carried by a cylinder basis function n^{1-j}.
std::optional<int> cylinder_index(const std::string& name) {
  for (int j = 0; j <= kMaxFIndex; ++j) {
    if (BasisFunction{false, 1 - j}.name() == name) return j;
  }
  return std::nullopt;
}

}  // namespace

void attach_closed_form_targets(FitReport& report) {
  if (report.geometry == BoundaryKind::PeriodicOdd) return;
  const long bits = report_bits(report);
  const Real x(bits, report.x);
  for (auto& c : report.coeffs) {
    if (is_periodic(report.geometry)) {
      if (const auto j = cylinder_index(c.name)) set_target(c, finite_or_empty([&] { return f_coeff(*j, x); }));
    } else if (c.name == "n") {
      set_target(c, finite_or_empty([&] { return g_coeff(report.geometry, 0, x); }));
    } else if (c.name == "log n") {
      set_target(c, finite_or_empty([&] { return g_coeff(report.geometry, 1, x); }));
    }
  }
}

FitReport check_strip_constants(BoundaryKind geometry, SpecialPoint point, int n_min, int n_max,
                                const CollectOptions& opts) {
  if (is_periodic(geometry)) throw std::invalid_argument("strip constants need a reflecting kind");
  const SampleSeries s = collect_series(geometry, special_point_value(point), n_min, n_max, opts);
  const BasisSpec basis{{false, 1}, {true, 0}, {false, 0}, {false, -1}};
  if (s.entries.size() < basis.size() + 2) {
    throw std::invalid_argument("the parity filter and the zeros of F leave too few sizes");
  }
  FitReport rep = fit_expansion(s, basis);
  const ConstantTriple t = strip_constants(geometry, point, std::min(s.bits, 2048L));
  set_target(rep.coeff("n"), t.g0);
  set_target(rep.coeff("log n"), t.g1);
  set_target(rep.coeff("1"), t.g2);
  return rep;
}

std::string_view to_string(FigureId f) {
  switch (f) {
    case FigureId::PerDataF0: return "perdata_f0";
    case FigureId::PerDataF1: return "perdata_f1";
    case FigureId::PerDataF2: return "perdata_f2";
    case FigureId::ReflDataEven: return "refldata_even";
    case FigureId::ReflDataOdd: return "refldata_odd";
  }
  return "";
}

FigureId parse_figure(std::string_view s) {
  for (auto f : {FigureId::PerDataF0, FigureId::PerDataF1, FigureId::PerDataF2, FigureId::ReflDataEven,
                 FigureId::ReflDataOdd}) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown figure '" + std::string(s) + "'");
}

FigureSpec figure_spec(FigureId f) {
  switch (f) {
    case FigureId::PerDataF0: return {BoundaryKind::PeriodicEven, "n", 101, 200, Parity::Odd};
    case FigureId::PerDataF1: return {BoundaryKind::PeriodicEven, "1", 101, 200, Parity::Odd};
    case FigureId::PerDataF2: return {BoundaryKind::PeriodicEven, "n^-1", 101, 200, Parity::Odd};
    case FigureId::ReflDataEven: return {BoundaryKind::ReflectingEven, "log n", 50, 100, Parity::Even};
    case FigureId::ReflDataOdd: return {BoundaryKind::ReflectingOdd, "log n", 50, 100, Parity::Even};
  }
  throw std::invalid_argument("unknown figure");
}

namespace {

struct BranchTargets {
  std::optional<Real> low;
  std::optional<Real> high;
};

BranchTargets branch_targets(BoundaryKind geometry, const std::string& coeff, const Real& r) {
  if (geometry == BoundaryKind::PeriodicOdd) return {};
  if (is_periodic(geometry)) {
    const auto j = cylinder_index(coeff);
    if (!j) return {};
    return {finite_or_empty([&] { return f_coeff_branch(*j, r, Branch::Low); }),
            finite_or_empty([&] { return f_coeff_branch(*j, r, Branch::High); })};
  }
  int j = -1;
  if (coeff == "n") j = 0;
  if (coeff == "log n") j = 1;
  if (j < 0) return {};
  return {finite_or_empty([&] { return g_coeff_branch(geometry, j, r, Branch::Low); }),
          finite_or_empty([&] { return g_coeff_branch(geometry, j, r, Branch::High); })};
}

}  // namespace

std::vector<FigureRow> report_rows(const FitReport& report) {
  const RParam p = r_of_x(Real(report_bits(report), report.x));
  std::vector<FigureRow> rows;
  for (const auto& c : report.coeffs) {
    BranchTargets t = branch_targets(report.geometry, c.name, p.r);
    // Constants known only at special points go in the active branch's column.
    if (!t.low && !t.high && c.target) (p.branch == Branch::Low ? t.low : t.high) = c.target;
    rows.push_back({report.x, p.r, p.branch, c.name, c.value, t.low, t.high, c.deviation, c.stability, report.n_min,
                    report.n_max, report.parity});
  }
  return rows;
}

std::vector<FigureRow> reproduce_figure(FigureId f, const std::vector<mpq_class>& x_grid,
                                        const CollectOptions& opts, int n_min, int n_max) {
  const FigureSpec spec = figure_spec(f);
  CollectOptions o = opts;
  if (o.parity == Parity::All) o.parity = spec.parity;
  if (n_min == 0) n_min = spec.n_min;
  if (n_max == 0) n_max = spec.n_max;
  std::vector<FigureRow> rows;
  for (const auto& x : x_grid) {
    const SampleSeries s = collect_series(spec.geometry, x, n_min, n_max, o);
    FitReport rep = fit_expansion(s, default_basis(spec.geometry));
    attach_closed_form_targets(rep);
    for (auto& row : report_rows(rep)) {
      if (row.coeff_name == spec.coeff_name) rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<FigureRow>& rows, int digits) {
  out << "x,r,branch,coeff_name,fitted,target_low,target_high,deviation,stability,n_min,n_max,parity\n";
  auto opt = [&](const std::optional<Real>& v) { return v ? v->to_string(digits) : std::string(); };
  for (const auto& r : rows) {
    out << format_rational(r.x) << ',' << r.r.to_string(digits) << ',' << to_string(r.branch) << ','
        << r.coeff_name << ',' << r.fitted.to_string(digits) << ',' << opt(r.target_low) << ','
        << opt(r.target_high) << ',' << opt(r.deviation) << ',' << r.stability.to_string(6) << ',' << r.n_min
        << ',' << r.n_max << ',' << to_string(r.parity) << '\n';
  }
}

std::string figure_svg(FigureId f, const std::vector<FigureRow>& rows) {
  const FigureSpec spec = figure_spec(f);
  PlotSpec plot;
  plot.title = std::string(to_string(f)) + ": coefficient of " + spec.coeff_name;
  plot.x_label = "x";
  plot.y_label = spec.coeff_name;
  PlotSeries dots{"fitted", "black", true, {}};
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  for (const auto& r : rows) {
    const double x = r.x.get_d();
    dots.points.emplace_back(x, r.fitted.to_double());
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
  }
  if (rows.empty()) return render_svg(plot);
  if (x_hi - x_lo < 1e-9) {
    x_lo -= 1;
    x_hi += 1;
  }
  PlotSeries low{"low branch", "blue", false, {}};
  PlotSeries high{"high branch", "red", false, {}};
  constexpr int kSamples = 400;
  for (int i = 0; i <= kSamples; ++i) {
    const double xd = x_lo + (x_hi - x_lo) * i / kSamples;
    const RParam p = r_of_x(Real(128, xd));
    const BranchTargets t = branch_targets(spec.geometry, spec.coeff_name, p.r);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    low.points.emplace_back(xd, t.low ? t.low->to_double() : nan);
    high.points.emplace_back(xd, t.high ? t.high->to_double() : nan);
  }
  plot.series = {low, high, dots};
  plot.fit_y_to = 2;
  return render_svg(plot);
}

}  // namespace tlent
