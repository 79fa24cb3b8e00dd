#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

/// The input to a bijection contains the pattern it must avoid. Carries one
/// occurrence (1-based positions) so callers can show it.
class PreconditionViolation : public std::invalid_argument {
 public:
  PreconditionViolation(const std::string& what, Pattern pattern,
                        std::vector<std::size_t> occurrence)
      : std::invalid_argument(what), pattern_(std::move(pattern)),
        occurrence_(std::move(occurrence)) {}

  const Pattern& pattern() const noexcept { return pattern_; }
  const std::vector<std::size_t>& occurrence() const noexcept { return occurrence_; }

 private:
  Pattern pattern_;
  std::vector<std::size_t> occurrence_;
};

/// Which entries a map rearranged. Positions are 1-based and ascending;
/// `moved_values` ascending; `assignments` in fill order.
struct BijectionTrace {
  std::vector<std::size_t> moved_positions;
  std::vector<Entry> moved_values;
  std::vector<std::pair<std::size_t, Entry>> assignments;
};

struct BijectionResult {
  Permutation image;
  BijectionTrace trace;
};

/// West's map from 12...k-avoiders to 12...k(k-1)-avoiders. Entries of rank
/// at most k-2 stay put. The positions of rank k-1 entries are refilled left
/// to right, each with the smallest unused rank k-1 value exceeding the
/// nearest rank k-2 entry on its left.
BijectionResult west_forward(const Permutation& p, int k);

/// Inverse of west_forward: entries of rank at least k-1 are rewritten into
/// their own slots in decreasing order.
BijectionResult west_inverse(const Permutation& q, int k);

/// Co-rank map from 12...k-avoiders to 213...k-avoiders. Entries of co-rank
/// at most k-2 stay put; the remaining slots are filled right to left, each
/// with the largest unused value below the nearest co-rank k-2 entry on its
/// right.
BijectionResult corank_forward(const Permutation& p, int k);

/// Inverse of corank_forward: entries of co-rank at least k-1 are rewritten
/// into their own slots in decreasing order.
BijectionResult corank_inverse(const Permutation& q, int k);

// Allocation-free kernels used by the sweeps. They assume the preconditions
// hold and write the image into `out`.
void west_forward_into(PermView p, int k, std::vector<Entry>& out);
void west_inverse_into(PermView q, int k, std::vector<Entry>& out);
void corank_forward_into(PermView p, int k, std::vector<Entry>& out);
void corank_inverse_into(PermView q, int k, std::vector<Entry>& out);

}  // namespace permpat
