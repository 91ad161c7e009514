#pragma once

// One JSON document per L-polynomial under a cache directory.

#include <filesystem>
#include <optional>
#include <string>

#include "aszeta/curves.hpp"
#include "aszeta/zeta.hpp"

namespace aszeta {

inline constexpr const char* kToolVersion = "aszeta 1.0.0";

struct CacheEntry {
  std::string key;  // family:p:k:a:r
  std::string lpoly;
  std::string tool_version;
  std::string timestamp;
};

class LPolyCache {
 public:
  explicit LPolyCache(std::filesystem::path dir);

  static std::string key(const CurveSpec& spec, unsigned r);
  std::filesystem::path path_for(const std::string& key) const;

  /// nullopt on a miss. Throws CacheCorruption if the entry is unreadable,
  /// filed under the wrong key, or fails validate().
  std::optional<LPolynomial> load(const CurveSpec& spec, unsigned r) const;
  std::optional<CacheEntry> load_entry(const std::string& key) const;
  void store(const CurveSpec& spec, const LPolynomial& L) const;

 private:
  std::filesystem::path dir_;
};

/// The --cache-dir flag if given, else $AS_ZETA_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value);

}  // namespace aszeta
