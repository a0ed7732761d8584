#include "monomialis/cache.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>

#include "monomialis/errors.hpp"
#include "monomialis/version.hpp"

namespace monomialis {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::make_key(const std::string& kind, int m, int r, int s, int e,
                                  long long n) {
  std::string key(kEngineVersion);
  key += ";kind=" + kind;
  key += ";m=" + std::to_string(m);
  key += ";r=" + std::to_string(r);
  key += ";s=" + std::to_string(s);
  key += ";e=" + std::to_string(e);
  key += ";n=" + std::to_string(n);
  return key;
}

std::string ResultCache::key_hash(const std::string& key) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : key) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / (key_hash(key) + ".json");
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const {
  std::ifstream in(entry_path(key));
  if (!in.is_open()) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded()) return std::nullopt;
  if (!entry.contains("key") || entry["key"] != key) return std::nullopt;
  if (!entry.contains("result")) return std::nullopt;
  return entry["result"];
}

void ResultCache::put(const std::string& key, const nlohmann::json& result) const {
  static std::atomic<unsigned> counter{0};
  nlohmann::json entry;
  entry["key"] = key;
  entry["result"] = result;
  entry["timestamp"] =
      static_cast<long long>(std::chrono::duration_cast<std::chrono::seconds>(
                                 std::chrono::system_clock::now().time_since_epoch())
                                 .count());

  const std::filesystem::path target = entry_path(key);
  const std::filesystem::path temp =
      dir_ / (key_hash(key) + ".tmp" + std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(temp);
    if (!out.is_open()) throw Error("cannot write cache entry: " + temp.string());
    out << entry.dump();
  }
  std::filesystem::rename(temp, target);
}

} // namespace monomialis
