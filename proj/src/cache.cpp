#include "aszeta/cache.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "aszeta/errors.hpp"

namespace aszeta {

namespace fs = std::filesystem;

LPolyCache::LPolyCache(fs::path dir) : dir_(std::move(dir)) {}

std::string LPolyCache::key(const CurveSpec& spec, unsigned r) {
  return family_name(spec.family) + ":" + std::to_string(spec.p.value()) + ":" + std::to_string(spec.k) + ":" +
         std::to_string(spec.a) + ":" + std::to_string(r);
}

fs::path LPolyCache::path_for(const std::string& key) const {
  std::string name = key;
  for (auto& ch : name)
    if (ch == ':') ch = '_';
  return dir_ / (name + ".json");
}

std::optional<CacheEntry> LPolyCache::load_entry(const std::string& key) const {
  const fs::path path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buf.str());
    CacheEntry e{j.at("key").get<std::string>(), j.at("lpoly").get<std::string>(),
                 j.at("tool_version").get<std::string>(), j.at("timestamp").get<std::string>()};
    if (e.key != key) throw CacheCorruption(path.string() + ": entry is filed under key '" + e.key + "'");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw CacheCorruption(path.string() + ": " + ex.what());
  }
}

std::optional<LPolynomial> LPolyCache::load(const CurveSpec& spec, unsigned r) const {
  const std::string k = key(spec, r);
  const auto entry = load_entry(k);
  if (!entry) return std::nullopt;
  LPolynomial L{spec.p, r, 0, {}};
  try {
    L = parse_lpoly(entry->lpoly, spec.p, r);
  } catch (const BadInput& ex) {
    throw CacheCorruption(path_for(k).string() + ": " + ex.what());
  }
  const auto violations = validate(L);
  if (!violations.empty())
    throw CacheCorruption(path_for(k).string() + ": cached L-polynomial fails validation (" +
                          violations.front().message + ")");
  if (Integer(L.g) != genus(spec))
    throw CacheCorruption(path_for(k).string() + ": cached L-polynomial has the wrong degree");
  return L;
}

void LPolyCache::store(const CurveSpec& spec, const LPolynomial& L) const {
  fs::create_directories(dir_);
  const std::string k = key(spec, L.r);
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

  nlohmann::ordered_json j;
  j["key"] = k;
  j["lpoly"] = render(L);
  j["p"] = L.p.value();
  j["r"] = L.r;
  j["g"] = L.g;
  j["tool_version"] = kToolVersion;
  j["timestamp"] = stamp;

  // Write then rename so a concurrent reader never sees a partial file.
  const fs::path path = path_for(k);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(2) << '\n';
  }
  fs::rename(tmp, path);
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv("AS_ZETA_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace aszeta
