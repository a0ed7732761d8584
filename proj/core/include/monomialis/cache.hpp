#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace monomialis {

/// Content-addressed JSON result cache.  Entries are single files named by a
/// stable hash of the key string; writes go through a temporary file and a
/// rename, so readers never observe partial entries.  The full key is stored
/// inside each entry and checked on read.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  /// The canonical key for a cached computation; includes the engine version.
  static std::string make_key(const std::string& kind, int m, int r, int s, int e, long long n);

  /// Stable 64-bit FNV-1a hash, hex-encoded; used as the entry file name.
  static std::string key_hash(const std::string& key);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& result) const;

private:
  std::filesystem::path entry_path(const std::string& key) const;

  std::filesystem::path dir_;
};

} // namespace monomialis
