#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "tlent/cache.hpp"
#include "tlent/closedform.hpp"

using namespace tlent;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("tlent-cache-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void rewrite(const fs::path& file, const std::function<void(nlohmann::json&)>& edit) {
  nlohmann::json j;
  {
    std::ifstream in(file);
    in >> j;
  }
  edit(j);
  std::ofstream(file) << j.dump();
}

}  // namespace

TEST_CASE("round trip") {
  TempDir dir;
  const GenFunCache cache(dir.path);
  const GenFun g = genfun_refl_even(9);
  CHECK_FALSE(cache.load(g.kind, g.L).has_value());
  cache.store(g);
  CHECK(cache.file_for(g.kind, g.L).filename() == "refl-even-L18.json");
  const auto back = cache.load(g.kind, g.L);
  REQUIRE(back.has_value());
  CHECK(*back == g);

  nlohmann::json j;
  std::ifstream(cache.file_for(g.kind, g.L)) >> j;
  CHECK(j.at("version") == kCacheVersion);
  CHECK(j.at("tool_version") == kToolVersion);
  CHECK(j.contains("created_unix"));
}

TEST_CASE("stale or damaged entries are misses") {
  TempDir dir;
  const GenFunCache cache(dir.path);
  const GenFun g = genfun_per_even(6);
  cache.store(g);
  const fs::path f = cache.file_for(g.kind, g.L);

  rewrite(f, [](nlohmann::json& j) { j["version"] = kCacheVersion + 1; });
  CHECK_FALSE(cache.load(g.kind, g.L).has_value());

  cache.store(g);
  rewrite(f, [](nlohmann::json& j) { j["Z"] = "7437"; });
  CHECK_FALSE(cache.load(g.kind, g.L).has_value());

  cache.store(g);
  rewrite(f, [](nlohmann::json& j) { j["L"] = 14; });
  CHECK_FALSE(cache.load(g.kind, g.L).has_value());

  std::ofstream(f) << "{ not json";
  CHECK_FALSE(cache.load(g.kind, g.L).has_value());
}

TEST_CASE("cached lookups are transparent") {
  TempDir dir;
  const GenFunCache cache(dir.path);
  for (auto [kind, L] : {std::pair{BoundaryKind::PeriodicEven, 10}, std::pair{BoundaryKind::PeriodicOdd, 9},
                         std::pair{BoundaryKind::ReflectingOdd, 11}}) {
    const GenFun plain = cached_genfun(kind, L, nullptr);
    const GenFun first = cached_genfun(kind, L, &cache);
    CHECK(fs::exists(cache.file_for(kind, L)));
    const GenFun second = cached_genfun(kind, L, &cache);
    CHECK(plain == first);
    CHECK(first == second);
  }
}

TEST_CASE("a poisoned entry is recomputed") {
  TempDir dir;
  const GenFunCache cache(dir.path);
  GenFun bad = genfun_per_even(5);
  bad.coeffs[1] += 1;
  cache.store(bad);
  CHECK(cached_genfun(BoundaryKind::PeriodicEven, 10, &cache) == genfun_per_even(5));
}
