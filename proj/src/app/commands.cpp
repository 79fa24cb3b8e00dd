#include "permpat/app/commands.hpp"

#include <charconv>
#include <memory>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "permpat/app/cache.hpp"
#include "permpat/app/oeis.hpp"
#include "permpat/app/render.hpp"
#include "permpat/bijections.hpp"
#include "permpat/enumeration.hpp"
#include "permpat/verify.hpp"

namespace permpat::app {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

NRange parse_n_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
      throw UsageError("malformed n range '" + text + "', expected A..B");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = number(text);
    return {n, n};
  }
  const NRange r{number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
  if (r.min < 0 || r.max < r.min) throw UsageError("empty n range '" + text + "'");
  return r;
}

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

/// Count lookups shared by count, table and oeis.
class Counter {
 public:
  Counter(bool use_cache, std::ostream& err, int jobs) : jobs_(jobs) {
    if (use_cache) {
      cache_ = std::make_unique<CountCache>(CountCache::default_path());
      cache_->load(&err);
    }
  }

  /// Uses the cache when present. New values are written at once unless
  /// `defer_writes`, in which case commit() writes them.
  CountRecord count(int n, const Pattern& q, bool alternating, bool defer_writes = false) {
    require_length(n);
    const CacheKey key{n, to_string(q), alternating};
    const auto method = alternating ? CountMethod::pruned_alternating : CountMethod::exhaustive;
    if (cache_) {
      if (auto hit = cache_->lookup(key)) return {n, q, alternating, *hit, method};
    }
    auto rec = count_avoiders(n, q, alternating, jobs_);
    if (cache_) {
      if (defer_writes)
        pending_.emplace_back(key, rec.count);
      else
        cache_->store(key, rec.count);
    }
    return rec;
  }

  void commit() {
    if (cache_)
      for (const auto& [key, value] : pending_) cache_->store(key, value);
    pending_.clear();
  }

 private:
  std::unique_ptr<CountCache> cache_;
  std::vector<std::pair<CacheKey, Count>> pending_;
  int jobs_;
};

int verify_cache(std::ostream& out, std::ostream& err, int jobs) {
  CountCache cache(CountCache::default_path());
  cache.load(&err);
  std::size_t bad = 0;
  for (const auto& [key, entry] : cache.entries()) {
    const auto rec = count_avoiders(key.n, parse_permutation(key.pattern), key.alternating, jobs);
    if (rec.count != entry.value) {
      ++bad;
      out << "mismatch n=" << key.n << " pattern=" << key.pattern << " alternating=" << key.alternating
          << " cached=" << entry.value << " recomputed=" << rec.count << '\n';
    }
  }
  out << "cache " << cache.path().string() << ": " << cache.entries().size() << " entries, " << bad
      << " mismatches\n";
  return bad == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding permutations: counts, rank bijections and their verification", "permpat"};
  app.require_subcommand(0, 1);
  bool verify_cache_flag = false;
  int jobs = default_jobs();
  app.add_flag("--verify-cache", verify_cache_flag, "Recompute every cached count and compare");
  app.add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);

  // count
  auto* count_cmd = app.add_subcommand("count", "Count permutations avoiding a pattern");
  int length = 0;
  std::string pattern_text;
  bool alternating = false, no_cache = false;
  std::string format_text = "plain";
  count_cmd->add_option("--length,-n", length, "Permutation length")->required();
  count_cmd->add_option("--pattern,-p", pattern_text, "Pattern, e.g. 1243 or 1,2,4,3")->required();
  count_cmd->add_flag("--alternating", alternating, "Only alternating permutations");
  count_cmd->add_flag("--no-cache", no_cache, "Neither read nor write the count cache");
  count_cmd->add_option("--format", format_text, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  // map
  auto* map_cmd = app.add_subcommand("map", "Apply a bijection to one permutation");
  std::string bijection = "west", perm_text;
  int k = 0;
  bool with_trace = false;
  map_cmd->add_option("--bijection,-b", bijection, "west, west-inv, corank or corank-inv")
      ->check(CLI::IsMember({"west", "west-inv", "corank", "corank-inv"}));
  map_cmd->add_option("--k,-k", k, "Length of the increasing pattern 12...k")->required();
  map_cmd->add_option("--perm", perm_text, "Permutation, e.g. 893624751")->required();
  map_cmd->add_flag("--trace", with_trace, "Print moved positions, values and fill order");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the identities by exhaustive enumeration");
  std::vector<std::string> claim_names;
  std::vector<int> ks{3, 4, 5};
  int max_n = 9, min_n = 0;
  std::string verify_format = "plain";
  verify_cmd->add_option("--claims", claim_names, "Comma separated claims (default: all)")->delimiter(',');
  verify_cmd->add_option("--max-n", max_n, "Largest n");
  verify_cmd->add_option("--min-n", min_n, "Smallest n");
  verify_cmd->add_option("--k", ks, "Comma separated k values")->delimiter(',');
  verify_cmd->add_option("--format", verify_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  // table
  auto* table_cmd = app.add_subcommand("table", "Counts for a range of lengths");
  std::string range_text;
  table_cmd->add_option("--pattern,-p", pattern_text, "Pattern")->required();
  table_cmd->add_flag("--alternating", alternating, "Only alternating permutations");
  table_cmd->add_option("--n-range", range_text, "A..B")->required();
  table_cmd->add_flag("--no-cache", no_cache, "Neither read nor write the count cache");
  table_cmd->add_option("--format", format_text, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  // oeis
  auto* oeis_cmd = app.add_subcommand("oeis", "Look the count sequence up in the OEIS");
  std::string offline_dir;
  std::size_t min_prefix = kDefaultMinPrefix;
  oeis_cmd->add_option("--pattern,-p", pattern_text, "Pattern")->required();
  oeis_cmd->add_flag("--alternating", alternating, "Only alternating permutations");
  oeis_cmd->add_option("--n-range", range_text, "A..B")->required();
  oeis_cmd->add_option("--offline", offline_dir, "Directory of canned responses");
  oeis_cmd->add_option("--min-prefix", min_prefix, "Minimum matched terms")->check(CLI::PositiveNumber);
  oeis_cmd->add_flag("--no-cache", no_cache, "Neither read nor write the count cache");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cache_flag) return verify_cache(out, err, jobs);

    if (*count_cmd) {
      Counter counter(!no_cache, err, jobs);
      const auto rec = counter.count(length, parse_permutation(pattern_text), alternating);
      out << render_count(rec, format_from_string(format_text));
      return kExitOk;
    }

    if (*map_cmd) {
      const auto p = parse_permutation(perm_text);
      BijectionResult result;
      if (bijection == "west") result = west_forward(p, k);
      else if (bijection == "west-inv") result = west_inverse(p, k);
      else if (bijection == "corank") result = corank_forward(p, k);
      else result = corank_inverse(p, k);
      out << render_map(result, with_trace);
      return kExitOk;
    }

    if (*verify_cmd) {
      SuiteConfig config;
      if (!claim_names.empty()) {
        config.claims.clear();
        for (const auto& name : claim_names) config.claims.push_back(claim_from_string(name));
      }
      config.n_range = {min_n, max_n};
      config.k_set = ks;
      config.jobs = jobs;
      validate(config);
      const auto reports = run_suite(config);
      out << render_reports(reports, format_from_string(verify_format));
      return suite_passed(reports) ? kExitOk : kExitFailed;
    }

    if (*table_cmd) {
      const auto q = parse_permutation(pattern_text);
      const auto range = parse_n_range(range_text);
      for (int n : {range.min, range.max}) require_length(n);
      Counter counter(!no_cache, err, jobs);
      std::vector<CountRecord> rows;
      for (int n = range.min; n <= range.max; ++n) rows.push_back(counter.count(n, q, alternating));
      out << render_table(rows, format_from_string(format_text));
      return kExitOk;
    }

    if (*oeis_cmd) {
      const auto q = parse_permutation(pattern_text);
      const auto range = parse_n_range(range_text);
      for (int n : {range.min, range.max}) require_length(n);
      Counter counter(!no_cache, err, jobs);
      std::vector<Count> terms;
      for (int n = range.min; n <= range.max; ++n) terms.push_back(counter.count(n, q, alternating, true).count);
      std::unique_ptr<OeisClient> client;
      if (offline_dir.empty())
        client = std::make_unique<HttpOeisClient>();
      else
        client = std::make_unique<FixtureOeisClient>(offline_dir);
      std::vector<OeisMatch> matches;
      try {
        matches = lookup_oeis(*client, terms, min_prefix);
      } catch (const NetworkError& e) {
        err << "network error: " << e.what() << '\n';
        return kExitNetwork;
      }
      counter.commit();
      out << render_oeis(matches, terms);
      return kExitOk;
    }

    out << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace permpat::app
