#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "permpat/enumeration.hpp"

namespace permpat::app {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "PERMPAT_CACHE";

struct CacheKey {
  int n = 0;
  std::string pattern;  // text form of the pattern
  bool alternating = false;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  CacheKey key;
  Count value = 0;
  std::int64_t created_at = 0;  // unix seconds
  std::string tool_version;
};

/// One record per line: n,pattern,alternating,count,timestamp,version.
/// Patterns in comma form are double-quoted.
std::string format_cache_line(const CacheEntry& e);
/// std::nullopt for anything malformed.
std::optional<CacheEntry> parse_cache_line(std::string_view line);

/// Append-only memo of counts. Later lines win; corrupt lines are skipped.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path file) : file_(std::move(file)) {}

  /// $PERMPAT_CACHE, else ~/.permpat/counts.csv.
  static std::filesystem::path default_path();

  /// Reads the file if it exists. Returns the number of skipped lines; a
  /// warning per skipped line goes to `warnings` when given.
  std::size_t load(std::ostream* warnings = nullptr);

  std::optional<Count> lookup(const CacheKey& key) const;
  void store(const CacheKey& key, Count value);

  const std::map<CacheKey, CacheEntry>& entries() const noexcept { return entries_; }
  const std::filesystem::path& path() const noexcept { return file_; }

 private:
  std::filesystem::path file_;
  std::map<CacheKey, CacheEntry> entries_;
  std::mutex write_mutex_;
};

}  // namespace permpat::app
