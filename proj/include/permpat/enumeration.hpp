#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

using Count = std::uint64_t;

/// Largest length any counting or generation routine accepts. 20! and E_20
/// both fit in 64 bits.
inline constexpr int kMaxLength = 20;

class LengthOutOfRange : public std::out_of_range {
 public:
  explicit LengthOutOfRange(int n)
      : std::out_of_range("length " + std::to_string(n) + " outside supported range 0.." +
                          std::to_string(kMaxLength)) {}
};

inline void require_length(int n) {
  if (n < 0 || n > kMaxLength) throw LengthOutOfRange(n);
}

/// First-entry classes used to split enumeration across workers: 1..n, or
/// the single unrestricted class 0 when n == 0.
std::vector<Entry> first_entry_classes(int n);

/// Visits every permutation of length n whose first entry is `first`
/// (0 = unrestricted) in lexicographic order.
template <typename Visit>
void for_each_permutation_with_first(int n, Entry first, Visit&& visit) {
  require_length(n);
  std::vector<Entry> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  if (first == 0) {
    do {
      visit(PermView(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return;
  }
  if (first < 1 || first > n) return;
  std::rotate(p.begin(), p.begin() + (first - 1), p.begin() + first);
  do {
    visit(PermView(p));
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

template <typename Visit>
void for_each_permutation(int n, Visit&& visit) {
  for_each_permutation_with_first(n, 0, std::forward<Visit>(visit));
}

namespace detail {

template <typename Visit>
void alternating_step(int n, std::vector<Entry>& prefix, std::uint32_t unused, Visit& visit) {
  const auto len = static_cast<int>(prefix.size());
  if (len == n) {
    visit(PermView(prefix));
    return;
  }
  // Position len (0-based) follows an ascent when len - 1 is even.
  const bool need_ascent = (len - 1) % 2 == 0;
  const Entry last = prefix.back();
  const Entry lo = need_ascent ? last + 1 : 1;
  const Entry hi = need_ascent ? n : last - 1;
  const bool final_step = len + 1 == n;
  // After placing v, the step that follows needs the opposite direction.
  const bool next_needs_ascent = !need_ascent;
  for (Entry v = lo; v <= hi; ++v) {
    const std::uint32_t bit = 1u << v;
    if (!(unused & bit)) continue;
    const std::uint32_t rest = unused & ~bit;
    if (!final_step) {
      const std::uint32_t below = rest & (bit - 1);
      const std::uint32_t above = rest & ~((bit << 1) - 1);
      if (next_needs_ascent ? above == 0 : below == 0) continue;
    }
    prefix.push_back(v);
    alternating_step(n, prefix, rest, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Visits every alternating permutation (p1 < p2 > p3 < ...) of length n
/// with first entry `first` (0 = unrestricted) in lexicographic order. Built
/// by prefix extension; dead prefixes are cut before they are extended.
template <typename Visit>
void for_each_alternating_with_first(int n, Entry first, Visit&& visit) {
  require_length(n);
  if (n == 0) {
    if (first == 0) visit(PermView{});
    return;
  }
  std::uint32_t all = 0;
  for (Entry v = 1; v <= n; ++v) all |= 1u << v;
  std::vector<Entry> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  const Entry lo = first == 0 ? 1 : first;
  const Entry hi = first == 0 ? n : std::min<Entry>(first, n);
  for (Entry v = lo; v <= hi; ++v) {
    const std::uint32_t bit = 1u << v;
    const std::uint32_t rest = all & ~bit;
    if (n > 1 && (rest & ~((bit << 1) - 1)) == 0) continue;  // needs a larger second entry
    prefix.push_back(v);
    detail::alternating_step(n, prefix, rest, visit);
    prefix.pop_back();
  }
}

template <typename Visit>
void for_each_alternating(int n, Visit&& visit) {
  for_each_alternating_with_first(n, 0, std::forward<Visit>(visit));
}

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_alternating(int n);

/// Runs `work(first)` for each first-entry class of length n on up to `jobs`
/// threads. Results come back in class order, so reductions over them are
/// deterministic regardless of scheduling.
template <typename Result, typename Work>
std::vector<Result> map_first_entry_classes(int n, int jobs, Work work) {
  const auto classes = first_entry_classes(n);
  std::vector<Result> results(classes.size());
  const auto workers = static_cast<std::size_t>(std::clamp<int>(jobs, 1, static_cast<int>(classes.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < classes.size(); ++i) results[i] = work(classes[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < classes.size(); i = next++) results[i] = work(classes[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// -- counting ----------------------------------------------------------------

/// n! for 0 <= n <= 20.
Count factorial(int n);

/// Number of alternating permutations of length n, from the Seidel-Entringer
/// triangle. Independent of the generator. Throws LengthOutOfRange for n > 20.
Count euler_number(int n);

enum class CountMethod { exhaustive, pruned_alternating };

std::string to_string(CountMethod m);
CountMethod count_method_from_string(const std::string& s);

/// S_n(q) (alternating_only = false) or A_n(q) (true).
struct CountRecord {
  int n = 0;
  Pattern pattern;
  bool alternating_only = false;
  Count count = 0;
  CountMethod method = CountMethod::exhaustive;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

CountRecord count_avoiders(int n, const Pattern& q, bool alternating_only, int jobs = 1);

/// Alternating 12...k-avoiders of odd length n whose last entry has rank
/// exactly k-1. Throws std::invalid_argument for even n or k < 3.
Count count_last_entry_rank(int n, int k, int jobs = 1);

/// The permutations counted by count_last_entry_rank, lexicographic, at most
/// `limit` of them.
std::vector<Permutation> last_entry_rank_witnesses(int n, int k, std::size_t limit);

}  // namespace permpat
