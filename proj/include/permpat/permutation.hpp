#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// Entries are the values 1..n in one-line notation.
using Entry = int;

/// Read-only view over one-line notation. Every algorithm in this library
/// works on views so enumeration kernels never have to allocate.
using PermView = std::span<const Entry>;

/// Raised when a value sequence is not a rearrangement of 1..n.
class InvalidPermutation : public std::invalid_argument {
 public:
  InvalidPermutation(const std::string& what, Entry offending)
      : std::invalid_argument(what), offending_(offending) {}

  Entry offending_value() const noexcept { return offending_; }

 private:
  Entry offending_;
};

/// A validated permutation of {1,...,n}. Immutable after construction.
class Permutation {
 public:
  Permutation() = default;

  /// Validates and wraps `values`. Throws InvalidPermutation naming the first
  /// duplicate, out-of-range or missing value.
  explicit Permutation(std::vector<Entry> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// 0-based access.
  Entry operator[](std::size_t i) const noexcept { return values_[i]; }
  /// 1-based access, matching one-line notation p_1 p_2 ... p_n.
  Entry at1(std::size_t position) const { return values_.at(position - 1); }

  const std::vector<Entry>& values() const noexcept { return values_; }
  PermView view() const noexcept { return values_; }
  operator PermView() const noexcept { return values_; }  // NOLINT

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Entry> values_;
};

/// A permutation used as a containment template.
using Pattern = Permutation;

Permutation make_permutation(std::vector<Entry> values);

/// Checks the bijection invariant without throwing.
bool is_permutation_of_1_to_n(PermView values);

// -- text form ---------------------------------------------------------------

/// Accepts either a compact digit string ("893624751", n <= 9) or comma
/// separated integers ("10,2,7,..."). Commas select the second form.
Permutation parse_permutation(std::string_view text);

/// Digit string when n <= 9, comma form otherwise. The empty permutation
/// renders as "".
std::string to_string(PermView p);

// -- standard patterns -------------------------------------------------------

/// 12...k
Pattern increasing_pattern(std::size_t k);
/// 12...k(k-1): the increasing pattern with its last two letters swapped.
Pattern west_target_pattern(std::size_t k);
/// 213...k: the increasing pattern with its first two letters swapped.
Pattern corank_target_pattern(std::size_t k);

// -- containment -------------------------------------------------------------

/// 0-based indices of one occurrence of `q` in `p`, if any.
std::optional<std::vector<std::size_t>> find_occurrence(PermView p, PermView q);

bool contains_pattern(PermView p, PermView q);
inline bool avoids(PermView p, PermView q) { return !contains_pattern(p, q); }

// -- rank statistics ---------------------------------------------------------

/// Length of the longest increasing subsequence, O(n log n).
std::size_t lis_length(PermView p);
/// Length of the longest decreasing subsequence, O(n log n).
std::size_t lds_length(PermView p);

/// ranks[i] is the length of the longest increasing subsequence ending at
/// position i (0-based).
struct RankProfile {
  std::vector<int> ranks;

  int operator[](std::size_t i) const noexcept { return ranks[i]; }
  std::size_t size() const noexcept { return ranks.size(); }
  int max() const noexcept;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// coranks[i] is the length of the longest increasing subsequence starting
/// at position i (0-based).
struct CorankProfile {
  std::vector<int> coranks;

  int operator[](std::size_t i) const noexcept { return coranks[i]; }
  std::size_t size() const noexcept { return coranks.size(); }
  int max() const noexcept;
  friend bool operator==(const CorankProfile&, const CorankProfile&) = default;
};

RankProfile rank_profile(PermView p);
CorankProfile corank_profile(PermView p);

// -- shape -------------------------------------------------------------------

/// p_1 < p_2 > p_3 < p_4 > ... ; true for n <= 1.
bool is_alternating(PermView p);

/// How the last entry of an odd-length alternating permutation is classified.
/// `trailing_peak` treats p_n as a peak regardless of its neighbour; `structural`
/// compares it with p_{n-1} only.
enum class EndpointConvention { trailing_peak, structural };

/// 1-based positions. `convention_only` lists positions whose class comes
/// from the endpoint convention and disagrees with a neighbour comparison.
struct PeaksAndValleys {
  std::vector<std::size_t> valleys;
  std::vector<std::size_t> peaks;
  std::vector<std::size_t> convention_only;
};

/// Requires an alternating permutation with n >= 1; throws
/// std::invalid_argument otherwise.
PeaksAndValleys peaks_and_valleys(PermView p,
                                  EndpointConvention convention = EndpointConvention::trailing_peak);

/// r_i = n + 1 - p_{n+1-i}.
Permutation reverse_complement(PermView p);
void reverse_complement_into(PermView p, std::vector<Entry>& out);

}  // namespace permpat
