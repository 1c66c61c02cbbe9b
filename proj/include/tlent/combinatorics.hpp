// Link patterns of the Temperley-Lieb loop model, their Dyck-path encoding,
// and the boundary-loop statistics used by the generating function.
//
// Sites are 1-based throughout. A pairing is stored as a vector of length L
// where entry i-1 holds the partner of site i, or kDefect for the unpaired
// site of an odd-size pattern.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tlent {

enum class BoundaryKind : std::uint8_t {
  PeriodicEven,
  PeriodicOdd,
  ReflectingEven,
  ReflectingOdd,
};

constexpr bool is_periodic(BoundaryKind k) {
  return k == BoundaryKind::PeriodicEven || k == BoundaryKind::PeriodicOdd;
}
constexpr bool is_odd(BoundaryKind k) {
  return k == BoundaryKind::PeriodicOdd || k == BoundaryKind::ReflectingOdd;
}

/// Short CLI name: per-even, per-odd, refl-even, refl-odd.
std::string_view to_string(BoundaryKind k);
std::optional<BoundaryKind> parse_kind(std::string_view s);

/// Throws std::invalid_argument unless L has the parity of `kind` and L >= 2
/// (L >= 3 for odd kinds).
void validate_size(BoundaryKind kind, int L);

/// Number of Temperley-Lieb generators acting on L sites.
constexpr int generator_count(BoundaryKind kind, int L) {
  return is_periodic(kind) ? L : L - 1;
}

inline constexpr int kDefect = 0;

class LinkPattern {
 public:
  /// Validates involution, defect count and planarity; throws
  /// std::invalid_argument on a malformed pairing.
  LinkPattern(BoundaryKind kind, std::vector<int> pairing);

  /// The reference state alpha_0: arcs (2i-1, 2i), site L unpaired if L odd.
  static LinkPattern small_arcs(BoundaryKind kind, int L);

  BoundaryKind kind() const { return kind_; }
  int size() const { return static_cast<int>(pairing_.size()); }
  int half_size() const { return size() / 2; }
  int partner(int site) const { return pairing_[site - 1]; }
  std::optional<int> defect() const;
  std::span<const int> pairing() const { return pairing_; }

  /// True when no chord covers the defect, i.e. the pattern also lives on
  /// the strip and has a Dyck-path image.
  bool dyck_presentable() const;

  std::string to_string() const;

  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
  friend std::strong_ordering operator<=>(const LinkPattern& a, const LinkPattern& b) {
    return a.pairing_ <=> b.pairing_;
  }

 private:
  BoundaryKind kind_;
  std::vector<int> pairing_;
};

enum class Step : std::uint8_t { Up, Down };

class DyckPath {
 public:
  /// Throws std::invalid_argument if a partial height goes negative or the
  /// final height is not L mod 2.
  explicit DyckPath(std::vector<Step> steps);
  static DyckPath parse(std::string_view ud);

  int size() const { return static_cast<int>(steps_.size()); }
  int end_height() const { return size() % 2; }
  std::span<const Step> steps() const { return steps_; }
  /// heights()[i] is the height after i steps, i = 0..L.
  std::vector<int> heights() const;
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// All link patterns of the given kind. Dyck-presentable kinds come in
/// lexicographic Dyck-word order (Up < Down); PeriodicOdd patterns are
/// ordered by defect site, then by the Dyck word read cyclically from the
/// site after the defect.
std::vector<LinkPattern> enumerate_link_patterns(BoundaryKind kind, int L);

/// Throws std::invalid_argument for a PeriodicOdd pattern whose defect is
/// covered by a chord.
DyckPath to_dyck(const LinkPattern& p);

/// Reflecting kind matching the parity of the path unless overridden; the
/// override must have the same parity and be Dyck-presentable.
LinkPattern from_dyck(const DyckPath& d);
LinkPattern from_dyck(const DyckPath& d, BoundaryKind kind);

/// k_alpha counted as the odd sites whose partner lies to the right. The
/// defect never counts.
int loops_right_openings(const LinkPattern& p);

/// k_alpha by tracing the loops of p glued to alpha_0. Valid for every kind.
int closed_loops_with_small_arcs(const LinkPattern& p);

/// Signed sum over complete tiles under the path, +1 on odd rows and -1 on
/// even rows. Odd-length paths are closed with a final down step first.
int signed_tile_sum(const DyckPath& d);
/// Same quantity by the column rule: +1 per tile over even sites, -1 over odd.
int signed_tile_sum_by_column(const DyckPath& d);

/// Number of ribbons in the Dyck ribbon decomposition (row-0 half tiles
/// included).
int dyck_ribbons(const DyckPath& d);

struct GeneratorAction {
  LinkPattern pattern;
  int closed_loops;
};

/// Action of e_i on p. Reflecting kinds accept 1 <= i <= L-1, periodic kinds
/// 1 <= i <= L with e_L acting on sites L and 1. Throws std::out_of_range.
GeneratorAction apply_ei(const LinkPattern& p, int i);

/// Site i moves to site i+shift (mod L). Periodic kinds only.
LinkPattern rotate(const LinkPattern& p, int shift);
/// Site i moves to L+1-i.
LinkPattern reflect(const LinkPattern& p);

}  // namespace tlent
