// On-disk cache of exact generating functions, one JSON file per (kind, L)
// with integers stored as decimal strings.
#pragma once

#include <filesystem>
#include <optional>

#include "tlent/genfun.hpp"
#include "tlent/groundstate.hpp"

namespace tlent {

inline constexpr int kCacheVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

class GenFunCache {
 public:
  explicit GenFunCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(BoundaryKind kind, int L) const;

  /// nullopt on a miss, a version mismatch, or an entry that fails to parse
  /// or to satisfy sum(coeffs) == Z.
  std::optional<GenFun> load(BoundaryKind kind, int L) const;
  /// Writes through a temporary file and a rename.
  void store(const GenFun& g) const;

 private:
  std::filesystem::path dir_;
};

/// The closed form where one exists, the oracle otherwise, served from
/// `cache` when it is non-null.
GenFun cached_genfun(BoundaryKind kind, int L, const GenFunCache* cache, const OracleLimits& limits = {});

}  // namespace tlent
