#include "tlent/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlent {

std::string_view to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::PeriodicEven: return "per-even";
    case BoundaryKind::PeriodicOdd: return "per-odd";
    case BoundaryKind::ReflectingEven: return "refl-even";
    case BoundaryKind::ReflectingOdd: return "refl-odd";
  }
  return "?";
}

std::optional<BoundaryKind> parse_kind(std::string_view s) {
  for (auto k : {BoundaryKind::PeriodicEven, BoundaryKind::PeriodicOdd,
                 BoundaryKind::ReflectingEven, BoundaryKind::ReflectingOdd}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

void validate_size(BoundaryKind kind, int L) {
  const int min_size = is_odd(kind) ? 3 : 2;
  if (L < min_size || (L % 2 == 1) != is_odd(kind)) {
    throw std::invalid_argument("size " + std::to_string(L) + " does not fit kind " +
                                std::string(to_string(kind)));
  }
}

namespace {

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

LinkPattern::LinkPattern(BoundaryKind kind, std::vector<int> pairing)
    : kind_(kind), pairing_(std::move(pairing)) {
  const int L = size();
  validate_size(kind_, L);
  int defects = 0;
  for (int i = 1; i <= L; ++i) {
    const int j = partner(i);
    if (j == kDefect) {
      ++defects;
      continue;
    }
    if (j < 1 || j > L || j == i || partner(j) != i) {
      throw std::invalid_argument("pairing is not an involution at site " + std::to_string(i));
    }
  }
  if (defects != (L % 2)) throw std::invalid_argument("wrong number of unpaired sites");
  for (int i = 1; i <= L; ++i) {
    const int j = partner(i);
    if (j < i) continue;
    for (int a = i + 1; a < j; ++a) {
      const int b = partner(a);
      if (b != kDefect && chords_cross(i, j, a, b)) {
        throw std::invalid_argument("chords (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") and (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") cross");
      }
    }
  }
  if (kind_ == BoundaryKind::ReflectingOdd && !dyck_presentable()) {
    throw std::invalid_argument("a chord covers the defect of a reflecting pattern");
  }
}

LinkPattern LinkPattern::small_arcs(BoundaryKind kind, int L) {
  validate_size(kind, L);
  std::vector<int> p(L, kDefect);
  for (int i = 1; i + 1 <= L; i += 2) {
    p[i - 1] = i + 1;
    p[i] = i;
  }
  return LinkPattern(kind, std::move(p));
}

std::optional<int> LinkPattern::defect() const {
  for (int i = 1; i <= size(); ++i) {
    if (partner(i) == kDefect) return i;
  }
  return std::nullopt;
}

bool LinkPattern::dyck_presentable() const {
  const auto d = defect();
  if (!d) return true;
  for (int i = 1; i < *d; ++i) {
    if (partner(i) > *d) return false;
  }
  return true;
}

std::string LinkPattern::to_string() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    const int j = partner(i);
    if (j != kDefect && j < i) continue;
    if (!out.empty()) out += ' ';
    out += j == kDefect ? "|" + std::to_string(i)
                        : "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) throw std::invalid_argument("path dips below zero");
  }
  if (steps_.empty() || h != end_height()) {
    throw std::invalid_argument("path ends at height " + std::to_string(h));
  }
}

DyckPath DyckPath::parse(std::string_view ud) {
  std::vector<Step> steps;
  steps.reserve(ud.size());
  for (char c : ud) {
    if (c == 'U' || c == 'u') {
      steps.push_back(Step::Up);
    } else if (c == 'D' || c == 'd') {
      steps.push_back(Step::Down);
    } else {
      throw std::invalid_argument(std::string("unexpected step character '") + c + "'");
    }
  }
  return DyckPath(std::move(steps));
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h(steps_.size() + 1, 0);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    h[i + 1] = h[i] + (steps_[i] == Step::Up ? 1 : -1);
  }
  return h;
}

std::string DyckPath::to_string() const {
  std::string s;
  for (Step st : steps_) s += st == Step::Up ? 'U' : 'D';
  return s;
}

namespace {

// Pairs the steps of a word of Up/Down; unmatched Ups become defects.
std::vector<int> pair_steps(std::span<const Step> steps) {
  std::vector<int> pairing(steps.size(), kDefect);
  std::vector<int> open;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const int site = static_cast<int>(k) + 1;
    if (steps[k] == Step::Up) {
      open.push_back(site);
    } else {
      const int a = open.back();
      open.pop_back();
      pairing[a - 1] = site;
      pairing[site - 1] = a;
    }
  }
  return pairing;
}

// Every word of `len` steps with nonnegative prefixes ending at `end`, in
// lexicographic order with Up < Down.
void dyck_words(int len, int end, std::vector<std::vector<Step>>& out) {
  std::vector<Step> cur;
  cur.reserve(len);
  auto rec = [&](auto&& self, int h) -> void {
    const int left = len - static_cast<int>(cur.size());
    if (left == 0) {
      if (h == end) out.push_back(cur);
      return;
    }
    if (h + 1 - end <= left - 1) {
      cur.push_back(Step::Up);
      self(self, h + 1);
      cur.pop_back();
    }
    if (h > 0) {
      cur.push_back(Step::Down);
      self(self, h - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<LinkPattern> enumerate_link_patterns(BoundaryKind kind, int L) {
  validate_size(kind, L);
  std::vector<LinkPattern> out;
  if (kind != BoundaryKind::PeriodicOdd) {
    std::vector<std::vector<Step>> words;
    dyck_words(L, L % 2, words);
    out.reserve(words.size());
    for (const auto& w : words) out.emplace_back(kind, pair_steps(w));
    return out;
  }
  std::vector<std::vector<Step>> words;
  dyck_words(L - 1, 0, words);
  out.reserve(words.size() * L);
  for (int d = 1; d <= L; ++d) {
    for (const auto& w : words) {
      const auto local = pair_steps(w);
      std::vector<int> p(L, kDefect);
      auto site = [&](int k) { return (d - 1 + k) % L + 1; };  // k-th site after d
      for (int k = 1; k <= L - 1; ++k) p[site(k) - 1] = site(local[k - 1]);
      out.emplace_back(kind, std::move(p));
    }
  }
  return out;
}

DyckPath to_dyck(const LinkPattern& p) {
  if (!p.dyck_presentable()) {
    throw std::invalid_argument("pattern " + p.to_string() + " has no Dyck path image");
  }
  std::vector<Step> steps;
  steps.reserve(p.size());
  for (int i = 1; i <= p.size(); ++i) {
    const int j = p.partner(i);
    steps.push_back(j == kDefect || j > i ? Step::Up : Step::Down);
  }
  return DyckPath(std::move(steps));
}

LinkPattern from_dyck(const DyckPath& d) {
  return from_dyck(d, d.size() % 2 ? BoundaryKind::ReflectingOdd : BoundaryKind::ReflectingEven);
}

LinkPattern from_dyck(const DyckPath& d, BoundaryKind kind) {
  return LinkPattern(kind, pair_steps(d.steps()));
}

int loops_right_openings(const LinkPattern& p) {
  int k = 0;
  for (int i = 1; i <= p.size(); i += 2) {
    if (p.partner(i) > i) ++k;
  }
  return k;
}

int closed_loops_with_small_arcs(const LinkPattern& p) {
  // Every site has degree at most two in the union of p and alpha_0, so each
  // component is a loop except the single strand through the defects.
  const int L = p.size();
  std::vector<int> root(L + 1);
  for (int i = 0; i <= L; ++i) root[i] = i;
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  int components = L;
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      root[a] = b;
      --components;
    }
  };
  for (int i = 1; i <= L; ++i) {
    if (p.partner(i) > i) join(i, p.partner(i));
  }
  for (int i = 1; i + 1 <= L; i += 2) join(i, i + 1);
  return components - L % 2;
}

namespace {

std::vector<int> closed_heights(const DyckPath& d) {
  auto h = d.heights();
  if (h.back() == 1) h.push_back(0);
  return h;
}

}  // namespace

int signed_tile_sum(const DyckPath& d) {
  const auto h = closed_heights(d);
  int s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (int j = 1; j + 1 <= h[i]; ++j) {
      if ((static_cast<int>(i) + j) % 2 == 0) continue;
      s += j % 2 ? 1 : -1;
    }
  }
  return s;
}

int signed_tile_sum_by_column(const DyckPath& d) {
  const auto h = closed_heights(d);
  int s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    s += i % 2 == 0 ? h[i] / 2 : -((h[i] - 1) / 2);
  }
  return s;
}

int dyck_ribbons(const DyckPath& d) {
  auto h = closed_heights(d);
  int ribbons = 0;
  for (;;) {
    bool any = false;
    std::size_t i = 0;
    while (i < h.size()) {
      if (h[i] < 1) {
        ++i;
        continue;
      }
      any = true;
      ++ribbons;
      while (i < h.size() && h[i] >= 1) h[i++] -= 2;
    }
    if (!any) return ribbons;
  }
}

GeneratorAction apply_ei(const LinkPattern& p, int i) {
  const int L = p.size();
  if (i < 1 || i > generator_count(p.kind(), L)) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  }
  const int j = i % L + 1;
  if (p.partner(i) == j) return {p, 1};
  std::vector<int> q(p.pairing().begin(), p.pairing().end());
  const int a = q[i - 1];
  const int b = q[j - 1];
  q[i - 1] = j;
  q[j - 1] = i;
  if (a != kDefect) q[a - 1] = b;
  if (b != kDefect) q[b - 1] = a;
  return {LinkPattern(p.kind(), std::move(q)), 0};
}

LinkPattern rotate(const LinkPattern& p, int shift) {
  if (!is_periodic(p.kind())) throw std::invalid_argument("rotation needs a periodic pattern");
  const int L = p.size();
  auto mv = [&](int s) { return ((s - 1 + shift) % L + L) % L + 1; };
  std::vector<int> q(L, kDefect);
  for (int s = 1; s <= L; ++s) {
    if (p.partner(s) != kDefect) q[mv(s) - 1] = mv(p.partner(s));
  }
  return LinkPattern(p.kind(), std::move(q));
}

LinkPattern reflect(const LinkPattern& p) {
  const int L = p.size();
  std::vector<int> q(L, kDefect);
  for (int s = 1; s <= L; ++s) {
    if (p.partner(s) != kDefect) q[L - s] = L + 1 - p.partner(s);
  }
  return LinkPattern(p.kind(), std::move(q));
}

}  // namespace tlent
