#include "permpat/enumeration.hpp"

namespace permpat {

std::vector<Entry> first_entry_classes(int n) {
  require_length(n);
  if (n == 0) return {0};
  std::vector<Entry> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](PermView p) { out.emplace_back(std::vector<Entry>(p.begin(), p.end())); });
  return out;
}

std::vector<Permutation> all_alternating(int n) {
  std::vector<Permutation> out;
  for_each_alternating(n, [&](PermView p) { out.emplace_back(std::vector<Entry>(p.begin(), p.end())); });
  return out;
}

Count factorial(int n) {
  require_length(n);
  Count f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Count>(i);
  return f;
}

Count euler_number(int n) {
  require_length(n);
  // Entringer numbers: row[j] = E(m, j), E(m, j) = E(m, j-1) + E(m-1, m-j).
  std::vector<Count> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Count> next(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j)
      next[static_cast<std::size_t>(j)] =
          next[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(m - j)];
    row = std::move(next);
  }
  return row.back();
}

std::string to_string(CountMethod m) {
  return m == CountMethod::exhaustive ? "exhaustive" : "pruned-alternating";
}

CountMethod count_method_from_string(const std::string& s) {
  if (s == "exhaustive") return CountMethod::exhaustive;
  if (s == "pruned-alternating") return CountMethod::pruned_alternating;
  throw std::invalid_argument("unknown count method '" + s + "'");
}

CountRecord count_avoiders(int n, const Pattern& q, bool alternating_only, int jobs) {
  require_length(n);
  CountRecord rec{n, q, alternating_only, 0,
                  alternating_only ? CountMethod::pruned_alternating : CountMethod::exhaustive};
  if (q.size() > static_cast<std::size_t>(n)) {
    rec.count = alternating_only ? euler_number(n) : factorial(n);
    return rec;
  }
  const auto partial = map_first_entry_classes<Count>(n, jobs, [&](Entry first) {
    Count c = 0;
    auto visit = [&](PermView p) { c += avoids(p, q) ? 1 : 0; };
    if (alternating_only)
      for_each_alternating_with_first(n, first, visit);
    else
      for_each_permutation_with_first(n, first, visit);
    return c;
  });
  rec.count = std::accumulate(partial.begin(), partial.end(), Count{0});
  return rec;
}

namespace {

void require_odd_and_k(int n, int k) {
  require_length(n);
  if (n % 2 == 0) throw std::invalid_argument("last-entry rank statistic needs odd n, got " + std::to_string(n));
  if (k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(k));
}

bool last_entry_has_rank(PermView p, int k) {
  if (lis_length(p) >= static_cast<std::size_t>(k)) return false;
  return rank_profile(p).ranks.back() == k - 1;
}

}  // namespace

Count count_last_entry_rank(int n, int k, int jobs) {
  require_odd_and_k(n, k);
  const auto partial = map_first_entry_classes<Count>(n, jobs, [&](Entry first) {
    Count c = 0;
    for_each_alternating_with_first(n, first, [&](PermView p) { c += last_entry_has_rank(p, k) ? 1 : 0; });
    return c;
  });
  return std::accumulate(partial.begin(), partial.end(), Count{0});
}

std::vector<Permutation> last_entry_rank_witnesses(int n, int k, std::size_t limit) {
  require_odd_and_k(n, k);
  std::vector<Permutation> out;
  for_each_alternating(n, [&](PermView p) {
    if (out.size() < limit && last_entry_has_rank(p, k))
      out.emplace_back(std::vector<Entry>(p.begin(), p.end()));
  });
  return out;
}

}  // namespace permpat
