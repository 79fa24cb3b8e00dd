#include "permpat/app/cache.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat::app {

namespace {

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && end == s.data() + s.size();
}

// Splits on commas outside double quotes; quotes are stripped.
std::optional<std::vector<std::string>> split_fields(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) return std::nullopt;
  return fields;
}

}  // namespace

std::string format_cache_line(const CacheEntry& e) {
  const bool quote = e.key.pattern.find(',') != std::string::npos;
  std::string line = std::to_string(e.key.n) + ',';
  line += quote ? '"' + e.key.pattern + '"' : e.key.pattern;
  line += ',' + std::string(e.key.alternating ? "1" : "0");
  line += ',' + std::to_string(e.value);
  line += ',' + std::to_string(e.created_at);
  line += ',' + e.tool_version;
  return line;
}

std::optional<CacheEntry> parse_cache_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto fields = split_fields(line);
  if (!fields || fields->size() != 6) return std::nullopt;
  const auto& f = *fields;
  CacheEntry e;
  if (!parse_number(f[0], e.key.n) || e.key.n < 0 || e.key.n > kMaxLength) return std::nullopt;
  try {
    e.key.pattern = to_string(parse_permutation(f[1]));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (f[2] != "0" && f[2] != "1") return std::nullopt;
  e.key.alternating = f[2] == "1";
  if (!parse_number(f[3], e.value) || !parse_number(f[4], e.created_at)) return std::nullopt;
  if (f[5].empty()) return std::nullopt;
  e.tool_version = f[5];
  return e;
}

std::filesystem::path CountCache::default_path() {
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  const char* home = std::getenv("HOME");
  return std::filesystem::path(home && *home ? home : ".") / ".permpat" / "counts.csv";
}

std::size_t CountCache::load(std::ostream* warnings) {
  std::ifstream in(file_);
  if (!in) return 0;
  std::size_t skipped = 0, lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (auto e = parse_cache_line(line)) {
      entries_[e->key] = std::move(*e);
    } else {
      ++skipped;
      if (warnings)
        *warnings << "warning: skipping corrupt cache line " << lineno << " in " << file_.string() << '\n';
    }
  }
  return skipped;
}

std::optional<Count> CountCache::lookup(const CacheKey& key) const {
  if (auto it = entries_.find(key); it != entries_.end()) return it->second.value;
  return std::nullopt;
}

void CountCache::store(const CacheKey& key, Count value) {
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  CacheEntry e{key, value, static_cast<std::int64_t>(now), kToolVersion};
  std::lock_guard lock(write_mutex_);
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file " + file_.string());
  out << format_cache_line(e) << '\n';
  entries_[key] = std::move(e);
}

}  // namespace permpat::app
