#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library's algorithms: nothing here calls into permpat beyond the
// value type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Tries every k-subset of positions and compares all pairs.
inline bool contains(const Seq& p, const Seq& q) {
  const std::size_t n = p.size(), k = q.size();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a)
      for (std::size_t b = 0; b < k && iso; ++b)
        if ((p[idx[a]] < p[idx[b]]) != (q[a] < q[b])) iso = false;
    if (iso) return true;
  } while (next_subset(idx, n));
  return false;
}

/// Longest increasing subsequence ending (or starting) at each position,
/// by scanning every subset of positions.
inline Seq ranks_by_subsets(const Seq& p, bool starting) {
  const std::size_t n = p.size();
  Seq best(n, 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Seq chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) chosen.push_back(static_cast<int>(i));
    bool inc = true;
    for (std::size_t j = 1; j < chosen.size() && inc; ++j) inc = p[chosen[j - 1]] < p[chosen[j]];
    if (!inc) continue;
    const auto at = starting ? chosen.front() : chosen.back();
    best[at] = std::max(best[at], static_cast<int>(chosen.size()));
  }
  return best;
}

/// O(n^2) LIS.
inline int lis_quadratic(const Seq& p) {
  Seq len(p.size(), 1);
  int best = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (p[j] < p[i]) len[i] = std::max(len[i], len[j] + 1);
    best = std::max(best, len[i]);
  }
  return best;
}

inline bool alternating(const Seq& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if ((p[i] < p[i + 1]) != (i % 2 == 0)) return false;
  return true;
}

/// All permutations of 1..n via std::next_permutation.
inline std::vector<Seq> permutations(int n) {
  Seq p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Seq> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Seq increasing(int k) {
  Seq q(static_cast<std::size_t>(k));
  std::iota(q.begin(), q.end(), 1);
  return q;
}

inline Seq random_permutation(int n, std::mt19937& rng) {
  Seq p = increasing(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
