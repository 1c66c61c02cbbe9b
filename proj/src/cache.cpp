#include "tlent/cache.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include <json.hpp>

#include "tlent/closedform.hpp"

namespace tlent {

using nlohmann::json;

GenFunCache::GenFunCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path GenFunCache::file_for(BoundaryKind kind, int L) const {
  return dir_ / (std::string(to_string(kind)) + "-L" + std::to_string(L) + ".json");
}

std::optional<GenFun> GenFunCache::load(BoundaryKind kind, int L) const {
  std::ifstream in(file_for(kind, L));
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
    if (j.at("kind").get<std::string>() != to_string(kind) || j.at("L").get<int>() != L) return std::nullopt;
    GenFun g{kind, L, {}, mpz_class(j.at("Z").get<std::string>())};
    for (const auto& c : j.at("coeffs")) g.coeffs.emplace_back(c.get<std::string>());
    if (static_cast<int>(g.coeffs.size()) != L / 2 + 1 || !g.normalised()) return std::nullopt;
    return g;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void GenFunCache::store(const GenFun& g) const {
  std::filesystem::create_directories(dir_);
  json j;
  j["version"] = kCacheVersion;
  j["kind"] = std::string(to_string(g.kind));
  j["L"] = g.L;
  j["Z"] = g.Z.get_str();
  j["coeffs"] = json::array();
  for (const auto& c : g.coeffs) j["coeffs"].push_back(c.get_str());
  j["tool_version"] = kToolVersion;
  j["created_unix"] = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::system_clock::now().time_since_epoch())
                          .count();
  const auto target = file_for(g.kind, g.L);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

GenFun cached_genfun(BoundaryKind kind, int L, const GenFunCache* cache, const OracleLimits& limits) {
  if (cache) {
    if (auto hit = cache->load(kind, L)) return *hit;
  }
  GenFun g = kind == BoundaryKind::PeriodicOdd ? genfun_oracle(kind, L, limits) : genfun_closed(kind, L);
  if (cache) cache->store(g);
  return g;
}

}  // namespace tlent
