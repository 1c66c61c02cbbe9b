// Extraction of large-n expansion coefficients from exact finite-size data by
// solving linear systems over sliding windows of sizes.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tlent/asymptotics.hpp"
#include "tlent/combinatorics.hpp"
#include "tlent/real.hpp"
#include "tlent/special_values.hpp"

namespace tlent {

enum class Parity { All, Even, Odd };
std::string_view to_string(Parity p);
/// "all", "even" or "odd"; throws std::invalid_argument.
Parity parse_parity(std::string_view s);
bool admits(Parity p, int n);

struct CollectOptions {
  Parity parity = Parity::All;
  /// Lower bound on the working precision; the series also gets at least
  /// max(512, 4N) bits where N is the largest digit count of an exact value.
  long bits = kDefaultBits;
  /// Worker threads; 0 means one per hardware thread.
  int jobs = 0;
  /// Use the combinatorial-number value at x in {-1, 0, 1/2, 2} where one
  /// is listed, proved or not.
  bool fast_path = false;
  /// Largest L accepted for odd periodic sizes, which only the oracle covers.
  int oracle_max_size = 17;
};

struct SampleEntry {
  int n;
  int sign;
  Real log_abs;
};

struct SampleSeries {
  BoundaryKind geometry{};
  mpq_class x;
  Parity parity = Parity::All;
  long bits = kDefaultBits;
  /// Sizes with F~ != 0, in increasing n.
  std::vector<SampleEntry> entries;
  /// Sizes where F~ vanishes exactly.
  std::vector<int> zeros;
  /// Sizes whose sign disagrees with epsilon_sign on the cylinder.
  std::vector<int> sign_mismatches;
};

/// log|F~_L(x)| for L = 2n (even kinds) or 2n+1 (odd kinds), n in
/// [n_min, n_max] filtered by parity. Throws std::invalid_argument for a
/// mixed-parity series within 1/10 of x = -1, and BudgetExceeded beyond the
/// evaluator's reach.
SampleSeries collect_series(BoundaryKind geometry, const mpq_class& x, int n_min, int n_max,
                            const CollectOptions& opts = {});

/// n^e for e != 0 (e = 1 is n, e = -k is n^-k), 1 for e = 0, or log n.
struct BasisFunction {
  bool log = false;
  int exponent = 0;

  Real eval(int n, long bits) const;
  /// "n", "log n", "1", "n^-1", ...
  std::string name() const;
  friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};
using BasisSpec = std::vector<BasisFunction>;

/// n, 1, n^-1, ... (periodic) or n, log n, 1, n^-1, ... (reflecting) with
/// `terms` entries in total.
BasisSpec make_basis(BoundaryKind geometry, int terms);
/// Six terms for periodic kinds, five for reflecting ones.
BasisSpec default_basis(BoundaryKind geometry);
/// Throws std::invalid_argument unless the functions are distinct, contain n
/// and 1, and contain log n exactly when the geometry is reflecting.
void validate_basis(const BasisSpec& basis, BoundaryKind geometry);

struct CoefficientFit {
  std::string name;
  Real value;
  /// max - min over the last three windows.
  Real stability;
  std::optional<Real> target;
  std::optional<Real> deviation;
};

struct FitReport {
  BoundaryKind geometry{};
  mpq_class x;
  Parity parity = Parity::All;
  int window = 0;
  bool least_squares = false;
  /// Range of the collected series and of the final window.
  int n_min = 0;
  int n_max = 0;
  int window_n_min = 0;
  std::vector<CoefficientFit> coeffs;

  /// Throws std::out_of_range for an unknown basis name.
  const CoefficientFit& coeff(std::string_view name) const;
  CoefficientFit& coeff(std::string_view name);
};

/// Solves sum_b c_b b(n) = log|F~| on every window of `window` consecutive
/// entries (least squares when window > |basis|) and reports the final
/// window. Needs at least window + 2 entries so that three windows exist.
/// A window of 0 means |basis|.
FitReport fit_expansion(const SampleSeries& s, const BasisSpec& basis, int window = 0);

/// Attaches closed-form targets at the report's x: f_j on the cylinder,
/// g_0 and g_1 on the strip.
void attach_closed_form_targets(FitReport& report);

/// Fits {n, log n, 1, n^-1} to strip data and compares (g_0, g_1, g_2) with
/// strip_constants. Throws std::invalid_argument when the parity filter or
/// the vanishing of F~ leaves too few sizes.
FitReport check_strip_constants(BoundaryKind geometry, SpecialPoint x, int n_min, int n_max,
                                const CollectOptions& opts);

enum class FigureId { PerDataF0, PerDataF1, PerDataF2, ReflDataEven, ReflDataOdd };
std::string_view to_string(FigureId f);
/// "perdata_f0", ..., "refldata_odd"; throws std::invalid_argument.
FigureId parse_figure(std::string_view s);

struct FigureRow {
  mpq_class x;
  Real r;
  Branch branch;
  std::string coeff_name;
  Real fitted;
  std::optional<Real> target_low;
  std::optional<Real> target_high;
  std::optional<Real> deviation;
  Real stability;
  int n_min;
  int n_max;
  Parity parity;
};

struct FigureSpec {
  BoundaryKind geometry;
  std::string coeff_name;
  int n_min;
  int n_max;
  Parity parity;
};
/// Kind, coefficient and default size range behind a figure id.
FigureSpec figure_spec(FigureId f);

/// One row per fitted coefficient, with the closed form of both branches
/// where one exists.
std::vector<FigureRow> report_rows(const FitReport& report);

/// One row per grid point. opts.parity == All selects the figure's default.
std::vector<FigureRow> reproduce_figure(FigureId f, const std::vector<mpq_class>& x_grid,
                                        const CollectOptions& opts, int n_min = 0, int n_max = 0);

/// Header plus one line per row; reals with `digits` significant digits.
void write_csv(std::ostream& out, const std::vector<FigureRow>& rows, int digits = 20);
/// Fitted points as dots over both closed-form branch curves.
std::string figure_svg(FigureId f, const std::vector<FigureRow>& rows);

}  // namespace tlent
