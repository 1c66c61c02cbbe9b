#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tlent/asymptotics.hpp"
#include "tlent/cache.hpp"
#include "tlent/checks.hpp"
#include "tlent/closedform.hpp"
#include "tlent/constants.hpp"
#include "tlent/fitter.hpp"
#include "tlent/groundstate.hpp"
#include "tlent/reference_tables.hpp"

namespace tlent::cli {

namespace {

using nlohmann::json;

constexpr int kDigits = 20;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "txt";
  std::string out_path;
  std::string cache_dir;
  int jobs = 0;
  long bits = kDefaultBits;
};

BoundaryKind kind_arg(const std::string& s) {
  const auto k = parse_kind(s);
  if (!k) throw UsageError("unknown kind '" + s + "' (per-even, per-odd, refl-even, refl-odd)");
  return *k;
}

std::vector<mpq_class> x_list(const std::string& s) {
  std::vector<mpq_class> xs;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) xs.push_back(parse_rational(item));
  if (xs.empty()) throw UsageError("--x needs at least one value");
  return xs;
}

std::unique_ptr<GenFunCache> open_cache(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty()) {
    if (const char* env = std::getenv("CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<GenFunCache>(dir);
}

/// Runs `emit` against --out or `out`.
void with_output(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (c.out_path.empty()) {
    emit(out);
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw std::runtime_error("cannot open " + c.out_path + " for writing");
  emit(f);
  if (!f) throw std::runtime_error("write to " + c.out_path + " failed");
}

std::string opt_str(const std::optional<Real>& v, int digits = kDigits) { return v ? v->to_string(digits) : ""; }

json opt_json(const std::optional<Real>& v) { return v ? json(v->to_string(kDigits)) : json(nullptr); }

void require_format(const Common& c, std::initializer_list<std::string_view> allowed, std::string_view cmd) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end()) {
    throw UsageError("--format " + c.format + " is not available for " + std::string(cmd));
  }
}

// genfun / oracle

void emit_genfun(std::ostream& out, const GenFun& g, const std::string& format) {
  if (format == "json") {
    json j;
    j["kind"] = std::string(to_string(g.kind));
    j["L"] = g.L;
    json coeffs = json::array();
    for (const auto& a : g.coeffs) coeffs.push_back(a.get_str());
    j["coeffs"] = coeffs;
    j["Z"] = g.Z.get_str();
    j["polynomial"] = g.polynomial();
    out << j.dump(2) << '\n';
    return;
  }
  out << "kind " << to_string(g.kind) << '\n'
      << "L " << g.L << '\n'
      << "Z_L F_L(x) = " << g.polynomial() << '\n'
      << "Z_L = " << g.Z.get_str() << '\n'
      << "Z_L F_L(-1) = " << format_rational(g.eval_unnormalised(-1)) << '\n'
      << "Z_L F_L(2) = " << format_rational(g.eval_unnormalised(2)) << '\n';
}

struct GenFunArgs {
  Common c;
  std::string kind;
  int L = 0;
  int max_size = 0;
};

OracleLimits limits_for(BoundaryKind kind, int max_size) {
  OracleLimits l;
  if (max_size > 0) l.max_size = max_size;
  else if (kind == BoundaryKind::PeriodicOdd) l.max_size = 17;
  return l;
}

int cmd_genfun(const GenFunArgs& a, bool oracle, std::ostream& out, std::ostream& err) {
  require_format(a.c, {"txt", "json"}, oracle ? "oracle" : "genfun");
  const BoundaryKind kind = kind_arg(a.kind);
  validate_size(kind, a.L);
  const auto cache = open_cache(a.c.cache_dir);
  const OracleLimits limits = limits_for(kind, a.max_size);
  GenFun g;
  if (!oracle && kind == BoundaryKind::PeriodicOdd) {
    err << "warning: no closed form for per-odd; using the transfer-matrix oracle\n";
  }
  if (oracle && kind != BoundaryKind::PeriodicOdd) {
    g = genfun_oracle(kind, a.L, limits);
  } else {
    g = cached_genfun(kind, a.L, cache.get(), limits);
  }
  with_output(a.c, out, [&](std::ostream& o) { emit_genfun(o, g, a.c.format); });
  return kExitOk;
}

// check

struct CheckArgs {
  Common c;
  std::string scope = "all";
  bool strict = false;
  bool verbose = false;
  CheckBudget budget;
};

int cmd_check(CheckArgs a, std::ostream& out) {
  require_format(a.c, {"txt", "json"}, "check");
  const auto cache = open_cache(a.c.cache_dir);
  a.budget.cache = cache.get();
  const CheckReport rep = run_checks(a.scope, a.budget);
  const bool ok = rep.ok(a.strict);
  with_output(a.c, out, [&](std::ostream& o) {
    if (a.c.format == "json") {
      json list = json::array();
      for (const auto& x : rep.outcomes) {
        list.push_back({{"suite", x.suite},
                        {"name", x.name},
                        {"status", std::string(to_string(x.status))},
                        {"result", x.skipped ? "skip" : x.pass ? "pass" : "fail"},
                        {"detail", x.detail}});
      }
      o << json{{"scope", a.scope}, {"ok", ok}, {"outcomes", list}}.dump(2) << '\n';
      return;
    }
    for (const auto& x : rep.outcomes) {
      const char* tag = x.skipped ? "SKIP" : x.pass ? "PASS" : "FAIL";
      if (!a.verbose && x.pass && !x.skipped) continue;
      o << tag << " [" << to_string(x.status) << "] " << x.suite << ": " << x.name;
      if (!x.detail.empty() && (!x.pass || a.verbose)) o << " (" << x.detail << ")";
      o << '\n';
    }
    o << "proved: " << rep.count(IdentityStatus::Proved, true) << " passed, "
      << rep.count(IdentityStatus::Proved, false) << " failed\n"
      << "conjectured: " << rep.count(IdentityStatus::Conjectured, true) << " corroborated, "
      << rep.count(IdentityStatus::Conjectured, false) << " failed\n"
      << "skipped: " << rep.skipped() << '\n'
      << (ok ? "OK" : "FAILED") << '\n';
  });
  return ok ? kExitOk : kExitCheckFailed;
}

// fit

struct FitArgs {
  Common c;
  std::string kind = "per-even";
  std::string x;
  std::string figure;
  std::string parity;
  int n_min = 0;
  int n_max = 0;
  int basis = 0;
  int window = 0;
  bool fast_path = false;
  int max_size = 17;
};

struct SizeDefaults {
  int n_min, n_max;
  Parity parity;
};

SizeDefaults size_defaults(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::PeriodicEven: return {101, 200, Parity::Odd};
    case BoundaryKind::PeriodicOdd: return {1, 8, Parity::All};
    default: return {50, 100, Parity::Even};
  }
}

std::vector<mpq_class> default_figure_grid(FigureId f) {
  const bool periodic = is_periodic(figure_spec(f).geometry);
  const char* grid = periodic ? "-5,-4,-3,-5/2,-2,-3/2,-5/4,-3/4,-1/2,-1/4,0,1/4,1/2,1,3/2,2,3,4,5"
                              : "-3,-2,-3/2,-1/2,-1/4,0,1/4,1/2,1,3/2,2,3";
  return x_list(grid);
}

void print_fit_txt(std::ostream& o, const FitReport& r) {
  o << "kind " << to_string(r.geometry) << "  x " << format_rational(r.x) << "  n " << r.n_min << ".." << r.n_max
    << " (" << to_string(r.parity) << ")  window " << r.window << (r.least_squares ? " least squares" : "")
    << " from n=" << r.window_n_min << '\n';
  for (const auto& c : r.coeffs) {
    o << "  " << c.name << ": " << c.value.to_string(kDigits) << "  stability " << c.stability.to_string(3);
    if (c.target) o << "  closed form " << c.target->to_string(kDigits) << "  deviation " << c.deviation->to_string(3);
    o << '\n';
  }
}

json fit_json(const FitReport& r) {
  json coeffs = json::array();
  for (const auto& c : r.coeffs) {
    coeffs.push_back({{"name", c.name},
                      {"fitted", c.value.to_string(kDigits)},
                      {"stability", c.stability.to_string(6)},
                      {"closed_form", opt_json(c.target)},
                      {"deviation", c.deviation ? json(c.deviation->to_string(6)) : json(nullptr)}});
  }
  return {{"kind", std::string(to_string(r.geometry))},
          {"x", format_rational(r.x)},
          {"parity", std::string(to_string(r.parity))},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"window", r.window},
          {"window_n_min", r.window_n_min},
          {"least_squares", r.least_squares},
          {"coefficients", coeffs}};
}

int cmd_fit(const FitArgs& a, std::ostream& out) {
  require_format(a.c, {"txt", "csv", "json", "svg"}, "fit");
  CollectOptions opts;
  opts.bits = a.c.bits;
  opts.jobs = a.c.jobs;
  opts.fast_path = a.fast_path;
  opts.oracle_max_size = a.max_size;
  if (!a.parity.empty()) opts.parity = parse_parity(a.parity);

  if (!a.figure.empty()) {
    const FigureId f = parse_figure(a.figure);
    const auto grid = a.x.empty() ? default_figure_grid(f) : x_list(a.x);
    const auto rows = reproduce_figure(f, grid, opts, a.n_min, a.n_max);
    with_output(a.c, out, [&](std::ostream& o) {
      if (a.c.format == "svg") {
        o << figure_svg(f, rows);
      } else {
        write_csv(o, rows, kDigits);
      }
    });
    return kExitOk;
  }
  if (a.c.format == "svg") throw UsageError("svg output needs --figure");
  if (a.x.empty()) throw UsageError("fit needs --x or --figure");
  const BoundaryKind kind = kind_arg(a.kind);
  const SizeDefaults d = size_defaults(kind);
  const int n_min = a.n_min > 0 ? a.n_min : d.n_min;
  const int n_max = a.n_max > 0 ? a.n_max : d.n_max;
  if (a.parity.empty()) opts.parity = d.parity;
  const BasisSpec basis = a.basis > 0 ? make_basis(kind, a.basis) : default_basis(kind);
  validate_basis(basis, kind);

  std::vector<FitReport> reports;
  for (const auto& x : x_list(a.x)) {
    FitReport r = fit_expansion(collect_series(kind, x, n_min, n_max, opts), basis, a.window);
    attach_closed_form_targets(r);
    reports.push_back(std::move(r));
  }
  with_output(a.c, out, [&](std::ostream& o) {
    if (a.c.format == "csv") {
      std::vector<FigureRow> rows;
      for (const auto& r : reports) {
        auto more = report_rows(r);
        rows.insert(rows.end(), more.begin(), more.end());
      }
      write_csv(o, rows, kDigits);
    } else if (a.c.format == "json") {
      json list = json::array();
      for (const auto& r : reports) list.push_back(fit_json(r));
      o << list.dump(2) << '\n';
    } else {
      for (const auto& r : reports) print_fit_txt(o, r);
    }
  });
  return kExitOk;
}

// asympt

struct AsymptArgs {
  Common c;
  std::string x;
};

std::optional<Real> try_real(const std::function<Real()>& f) {
  try {
    Real v = f();
    if (v.is_finite()) return v;
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

int cmd_asympt(const AsymptArgs& a, std::ostream& out) {
  require_format(a.c, {"txt", "json"}, "asympt");
  if (a.x.empty()) throw UsageError("asympt needs --x");
  json list = json::array();
  std::ostringstream txt;
  for (const auto& xq : x_list(a.x)) {
    const Real x(a.c.bits, xq);
    const RParam p = r_of_x(x);
    json j{{"x", format_rational(xq)}, {"r", p.r.to_string(kDigits)}, {"branch", to_string(p.branch)}};
    txt << "x " << format_rational(xq) << "\nr " << p.r.to_string(kDigits) << "\nbranch " << to_string(p.branch)
        << '\n';
    for (int k = 0; k <= kMaxFIndex; ++k) {
      const auto v = try_real([&] { return f_coeff(k, x); });
      j["f_" + std::to_string(k)] = opt_json(v);
      txt << "f_" << k << ' ' << opt_str(v) << '\n';
    }
    const auto g = try_real([&] { return affleck_ludwig_g(x); });
    j["g_AL"] = opt_json(g);
    txt << "g_AL " << (g ? g->to_string(kDigits) : "undefined for x <= -1") << '\n';
    for (auto geom : {BoundaryKind::ReflectingEven, BoundaryKind::ReflectingOdd}) {
      const std::string tag = geom == BoundaryKind::ReflectingEven ? "strip_even" : "strip_odd";
      for (int k = 0; k <= 1; ++k) {
        const auto v = try_real([&] { return g_coeff(geom, k, x); });
        j[tag + "_g_" + std::to_string(k)] = opt_json(v);
        txt << tag << "_g_" << k << ' ' << opt_str(v) << '\n';
      }
      const auto sp = special_point(xq);
      if (sp && *sp != SpecialPoint::One) {
        const ConstantTriple t = strip_constants(geom, *sp, a.c.bits);
        j[tag + "_g_2"] = t.g2.to_string(kDigits);
        txt << tag << "_g_2 " << t.g2.to_string(kDigits) << '\n';
      }
    }
    list.push_back(j);
  }
  with_output(a.c, out, [&](std::ostream& o) {
    if (a.c.format == "json") o << list.dump(2) << '\n';
    else o << txt.str();
  });
  return kExitOk;
}

// table

struct TableArgs {
  Common c;
  std::string name;
  int max_size = 0;
};

constexpr const char* kTableNames[] = {"per-even",          "per-odd", "refl-even", "refl-odd", "strip-even-constants",
                                       "strip-odd-constants", "cylinder-corrections"};

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void genfun_table(const TableArgs& a, BoundaryKind kind, std::ostream& o) {
  const auto cache = open_cache(a.c.cache_dir);
  const OracleLimits limits = limits_for(kind, a.max_size);
  if (a.c.format == "csv") o << "L,source,polynomial,Z,ZF(-1),ZF(2),match\n";
  for (const auto& row : reference_table(kind)) {
    const GenFun g = cached_genfun(kind, row.L, cache.get(), limits);
    GenFun ref;
    ref.kind = kind;
    ref.L = row.L;
    for (const auto& s : row.coeffs) ref.coeffs.emplace_back(s);
    ref.Z = mpz_class(row.Z);
    const std::string zm1 = format_rational(g.eval_unnormalised(-1));
    const std::string z2 = format_rational(g.eval_unnormalised(2));
    const bool match = g == ref && zm1 == row.zf_minus_one && z2 == row.zf_two;
    const std::string source = kind == BoundaryKind::PeriodicOdd ? "oracle" : "closed form";
    if (a.c.format == "csv") {
      o << row.L << ',' << source << ',' << csv_quote(g.polynomial()) << ',' << g.Z.get_str() << ',' << zm1 << ','
        << z2 << ',' << (match ? "yes" : "no") << '\n';
      o << row.L << ",reference," << csv_quote(ref.polynomial()) << ',' << row.Z << ',' << row.zf_minus_one << ','
        << row.zf_two << ",\n";
    } else {
      o << "L=" << row.L << "  match " << (match ? "yes" : "no") << '\n'
        << "  " << source << ": " << g.polynomial() << "  Z=" << g.Z.get_str() << "  ZF(-1)=" << zm1
        << "  ZF(2)=" << z2 << '\n'
        << "  reference: " << ref.polynomial() << "  Z=" << row.Z << "  ZF(-1)=" << row.zf_minus_one
        << "  ZF(2)=" << row.zf_two << '\n';
    }
  }
}

void constants_table(const TableArgs& a, BoundaryKind geom, std::ostream& o) {
  CollectOptions opts;
  opts.parity = Parity::Even;
  opts.fast_path = true;
  opts.bits = a.c.bits;
  opts.jobs = a.c.jobs;
  const double tol[] = {1e-6, 1e-3, 1e-2};
  const char* names[] = {"g_0", "g_1", "g_2"};
  const char* basis[] = {"n", "log n", "1"};
  if (a.c.format == "csv") o << "x,coeff,closed_form,fitted,deviation,stability,tolerance,match\n";
  for (auto sp : {SpecialPoint::MinusOne, SpecialPoint::Zero, SpecialPoint::Half, SpecialPoint::Two}) {
    const FitReport r = check_strip_constants(geom, sp, 50, 100, opts);
    for (int k = 0; k < 3; ++k) {
      const CoefficientFit& c = r.coeff(basis[k]);
      const bool match = c.deviation->to_double() <= tol[k];
      if (a.c.format == "csv") {
        o << format_rational(r.x) << ',' << names[k] << ',' << c.target->to_string(kDigits) << ','
          << c.value.to_string(kDigits) << ',' << c.deviation->to_string(3) << ',' << c.stability.to_string(3) << ','
          << tol[k] << ',' << (match ? "yes" : "no") << '\n';
      } else {
        o << "x=" << format_rational(r.x) << "  " << names[k] << "  closed form " << c.target->to_string(kDigits)
          << "  fitted " << c.value.to_string(kDigits) << "  deviation " << c.deviation->to_string(3) << "  match "
          << (match ? "yes" : "no") << '\n';
      }
    }
  }
}

void corrections_table(const TableArgs& a, std::ostream& o) {
  CollectOptions opts;
  opts.bits = std::max(a.c.bits, 2048L);
  opts.jobs = a.c.jobs;
  opts.parity = Parity::Odd;
  const BasisSpec basis = make_basis(BoundaryKind::PeriodicEven, 12);
  if (a.c.format == "csv") o << "x,r,branch,j,minus_S,fitted,deviation,stability\n";
  for (const auto& xq : x_list("-3,-2,-1/2,1/4,1/2,2,5")) {
    FitReport rep = fit_expansion(collect_series(BoundaryKind::PeriodicEven, xq, 201, 400, opts), basis);
    attach_closed_form_targets(rep);
    const RParam p = r_of_x(Real(opts.bits, xq));
    for (int j = 2; j <= kMaxFIndex; ++j) {
      const CoefficientFit& c = rep.coeff("n^-" + std::to_string(j - 1));
      if (a.c.format == "csv") {
        o << format_rational(xq) << ',' << p.r.to_string(kDigits) << ',' << to_string(p.branch) << ',' << j << ','
          << c.target->to_string(kDigits) << ',' << c.value.to_string(kDigits) << ',' << c.deviation->to_string(3)
          << ',' << c.stability.to_string(3) << '\n';
      } else {
        o << "x=" << format_rational(xq) << "  f_" << j << " = -S_-" << (j - 1) << "  closed form "
          << c.target->to_string(kDigits) << "  fitted " << c.value.to_string(kDigits) << "  deviation "
          << c.deviation->to_string(3) << '\n';
      }
    }
  }
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  require_format(a.c, {"txt", "csv"}, "table");
  const std::string& n = a.name;
  std::function<void(std::ostream&)> emit;
  if (const auto k = parse_kind(n)) {
    emit = [&, kind = *k](std::ostream& o) { genfun_table(a, kind, o); };
  } else if (n == "strip-even-constants" || n == "strip-odd-constants") {
    const BoundaryKind g = n == "strip-even-constants" ? BoundaryKind::ReflectingEven : BoundaryKind::ReflectingOdd;
    emit = [&, g](std::ostream& o) { constants_table(a, g, o); };
  } else if (n == "cylinder-corrections") {
    emit = [&](std::ostream& o) { corrections_table(a, o); };
  } else {
    std::string all;
    for (const char* t : kTableNames) all += std::string(all.empty() ? "" : ", ") + t;
    throw UsageError("unknown table '" + n + "' (" + all + ")");
  }
  // Render fully before touching --out so a failure leaves no partial file.
  std::ostringstream buf;
  emit(buf);
  with_output(a.c, out, [&](std::ostream& o) { o << buf.str(); });
  return kExitOk;
}

// constants

int cmd_constants(const Common& c, std::ostream& out) {
  require_format(c, {"txt", "json"}, "constants");
  const long bits = c.bits;
  const int digits = static_cast<int>(bits * 0.30103) - 5;
  const ConstantSelfTest t = self_test_constants(bits);
  const Real tol = pow(Real(bits, 2L), Real(bits, 32 - bits));
  const bool ok = t.ok(tol);
  const std::pair<const char*, Real> values[] = {{"pi", pi(bits)},
                                                 {"Gamma(1/3)", gamma_third(bits)},
                                                 {"Gamma(1/6)", gamma_sixth(bits)},
                                                 {"Glaisher A", glaisher(bits)}};
  const std::pair<const char*, const Real*> residuals[] = {{"Gamma(1/3)Gamma(2/3) - 2pi/sqrt3", &t.reflection_third},
                                                           {"Gamma(1/6)Gamma(5/6) - 2pi", &t.reflection_sixth},
                                                           {"A - 400-digit literal", &t.glaisher_literal}};
  with_output(c, out, [&](std::ostream& o) {
    if (c.format == "json") {
      json j{{"bits", bits}, {"ok", ok}};
      for (const auto& [k, v] : values) j["values"][k] = v.to_string(digits);
      for (const auto& [k, v] : residuals) j["residuals"][k] = v->to_string(3);
      o << j.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : values) o << k << " = " << v.to_string(digits) << '\n';
    for (const auto& [k, v] : residuals) o << "residual " << k << " = " << v->to_string(3) << '\n';
    o << "self-test " << (ok ? "OK" : "FAILED") << '\n';
  });
  return ok ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App* sub, Common& c, std::initializer_list<std::string> formats) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::vector<std::string>(formats)));
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  sub->add_option("--jobs", c.jobs, "Worker threads (0: one per hardware thread)")->check(CLI::NonNegativeNumber);
  sub->add_option("--bits", c.bits, "Working precision in bits")->check(CLI::Range(64L, 1L << 20));
  sub->add_option("--cache-dir", c.cache_dir, "Generating-function cache (default: $CACHE_DIR)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary-entropy generating functions of the Temperley-Lieb loop model", "tlent"};
  app.require_subcommand(1);

  GenFunArgs gen, orc;
  for (auto [name, a, help] : {std::tuple{"genfun", &gen, "Exact Z_L F_L(x) from the closed form"},
                               std::tuple{"oracle", &orc, "Exact Z_L F_L(x) from the transfer-matrix ground state"}}) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, a->c, {"txt", "json"});
    s->add_option("--kind", a->kind, "per-even, per-odd, refl-even or refl-odd")->required();
    s->add_option("-L,--size", a->L, "System size")->required();
    s->add_option("--max-size", a->max_size, "Largest size handed to the oracle (default 16, 17 for per-odd)");
  }

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Exact verification suites");
  add_common(check, chk.c, {"txt", "json"});
  check->add_option("scope", chk.scope, "tables, identities, lemma, ode or all")
      ->check(CLI::IsMember({"tables", "identities", "lemma", "ode", "all"}));
  check->add_flag("--strict-conjectures", chk.strict, "Treat conjectured identities as fatal");
  check->add_flag("-v,--verbose", chk.verbose, "List passing checks too");
  check->add_option("--max-size", chk.budget.periodic_odd_max_size, "Largest per-odd size handed to the oracle");
  check->add_option("--n-max", chk.budget.proved_n_max, "Largest n for proved identities");
  check->add_option("--conjectured-n-max", chk.budget.conjectured_n_max, "Largest n for conjectured identities");

  FitArgs fit;
  auto* fitc = app.add_subcommand("fit", "Fit the large-n expansion of log|F~| to exact data");
  add_common(fitc, fit.c, {"txt", "csv", "json", "svg"});
  fit.c.bits = 1024;
  fitc->add_option("--kind", fit.kind, "per-even, per-odd, refl-even or refl-odd")->capture_default_str();
  fitc->add_option("--x", fit.x, "Comma-separated exact rationals, e.g. 1/2,-3,0.25");
  fitc->add_option("--figure", fit.figure, "perdata_f0, perdata_f1, perdata_f2, refldata_even or refldata_odd");
  fitc->add_option("--n-min", fit.n_min, "Smallest n (L = 2n or 2n+1)");
  fitc->add_option("--n-max", fit.n_max, "Largest n");
  fitc->add_option("--parity", fit.parity, "all, even or odd")->check(CLI::IsMember({"all", "even", "odd"}));
  fitc->add_option("--basis", fit.basis, "Number of basis functions")->check(CLI::Range(2, 40));
  fitc->add_option("--window", fit.window, "Window length (least squares above the basis size)");
  fitc->add_flag("--fast-path", fit.fast_path, "Use listed combinatorial values at x = -1, 0, 1/2, 2");
  fitc->add_option("--max-size", fit.max_size, "Largest per-odd size handed to the oracle");

  AsymptArgs as;
  auto* asc = app.add_subcommand("asympt", "Closed-form expansion coefficients at x");
  add_common(asc, as.c, {"txt", "json"});
  asc->add_option("--x", as.x, "Comma-separated exact rationals")->required();

  TableArgs tab;
  auto* tabc = app.add_subcommand("table", "Regenerate a reference table next to the published values");
  add_common(tabc, tab.c, {"txt", "csv"});
  tabc->add_option("name", tab.name,
                   "per-even, per-odd, refl-even, refl-odd, strip-even-constants, strip-odd-constants or "
                   "cylinder-corrections")
      ->required();
  tabc->add_option("--max-size", tab.max_size, "Largest per-odd size handed to the oracle");

  Common cst;
  auto* cstc = app.add_subcommand("constants", "High-precision constants with a self-test");
  add_common(cstc, cst, {"txt", "json"});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("genfun")) return cmd_genfun(gen, false, out, err);
    if (app.got_subcommand("oracle")) return cmd_genfun(orc, true, out, err);
    if (app.got_subcommand("check")) return cmd_check(chk, out);
    if (app.got_subcommand("fit")) return cmd_fit(fit, out);
    if (app.got_subcommand("asympt")) return cmd_asympt(as, out);
    if (app.got_subcommand("table")) return cmd_table(tab, out);
    if (app.got_subcommand("constants")) return cmd_constants(cst, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace tlent::cli
