#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permpat/enumeration.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

enum class Claim {
  lemma_west,      // S_n(12..k) = S_n(12..k(k-1)) through f
  eq3_even,        // A_n(12..k) = A_n(12..k(k-1)) for even n through f
  eq4_alln,        // A_n(12..k) = A_n(213..k) for all n through g
  corollary_odd,   // odd n: A_n(12..k) - A_n(12..k(k-1)) = #last entry of rank k-1
  roundtrip_f,
  roundtrip_g,
  peak_law,        // even n: rank k-1 entries of alternating avoiders are peaks
  valley_law,      // co-rank k-1 entries of alternating avoiders are valleys
  conjugation_fg,  // g = rc o f o rc, exploratory
};

std::string to_string(Claim c);
/// Throws std::invalid_argument listing the valid names.
Claim claim_from_string(std::string_view name);
const std::vector<Claim>& all_claims();
std::string claim_vocabulary();

/// Exploratory claims report counterexamples but never fail a suite.
bool is_exploratory(Claim c);
/// Largest n a claim accepts.
int max_length_for(Claim c);

enum class Status { verified, counterexample, skipped };
std::string to_string(Status s);
Status status_from_string(std::string_view s);

struct NRange {
  int min = 0;
  int max = 0;

  static NRange upto(int n) { return {0, n}; }
  friend bool operator==(const NRange&, const NRange&) = default;
};

struct Witness {
  Permutation perm;
  int k = 0;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// One (n, k) cell: both sides of the identity, plus the last-entry-rank
/// statistic for the odd-n claim.
struct CountRow {
  CountRecord left;
  CountRecord right;
  std::optional<Count> last_entry_rank;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

inline constexpr std::size_t kWitnessCap = 16;

struct VerificationReport {
  Claim claim = Claim::lemma_west;
  NRange n_range;
  std::vector<int> k_set;
  Status status = Status::skipped;
  bool exploratory = false;
  Count instances = 0;
  /// Counterexamples when status is counterexample, illustrative instances
  /// otherwise. Lexicographic within each (n, k), cells in (n, k) order.
  std::vector<Witness> witnesses;
  std::vector<CountRow> counts_table;
  std::vector<std::string> notes;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Outcome of one claim on one permutation. Sweeps are built from this, and
/// witnesses are re-checked through it.
struct InstanceOutcome {
  bool applicable = false;  // inside the claim's domain (parity, alternation)
  bool in_left = false;     // avoids the source pattern
  bool in_right = false;    // avoids the target pattern
  bool holds = true;
  bool last_entry_rank = false;
  bool notable = false;     // worth listing as an example (an entry moved, ...)
  std::optional<std::uint64_t> image_code;
  std::string note;  // failure description, or an example line when requested
};

InstanceOutcome check_instance(Claim c, PermView p, int k, bool want_note = true);

/// True when `w` fails its claim when checked on its own.
bool witness_refails(Claim c, const Witness& w);

/// Packs a permutation of length <= 16 into 4-bit digits.
std::uint64_t encode(PermView p);

VerificationReport check_claim(Claim c, NRange range, const std::vector<int>& k_set, int jobs = 1);

VerificationReport check_lemma_west(NRange range, const std::vector<int>& k_set, int jobs = 1);
VerificationReport check_even_equality(NRange range, const std::vector<int>& k_set, int jobs = 1);
VerificationReport check_odd_discrepancy(NRange range, const std::vector<int>& k_set, int jobs = 1);
VerificationReport check_corank_equality(NRange range, const std::vector<int>& k_set, int jobs = 1);

struct SuiteConfig {
  std::vector<Claim> claims = all_claims();
  NRange n_range{0, 9};
  std::vector<int> k_set{3, 4, 5};
  int jobs = 1;
};

/// Throws std::invalid_argument when a range or k is unusable for a selected
/// claim.
void validate(const SuiteConfig& config);

/// Validates everything first, then runs each claim.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// No counterexample among non-exploratory claims.
bool suite_passed(const std::vector<VerificationReport>& reports);

}  // namespace permpat
