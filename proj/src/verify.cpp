#include "permpat/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "permpat/bijections.hpp"

namespace permpat {

namespace {

struct ClaimInfo {
  Claim claim;
  const char* name;
  bool alternating;  // sweep alternating permutations only
  int parity;        // -1 any, 0 even, 1 odd
  int max_n;
  bool exploratory;
  bool cardinality;  // checks that images are distinct
  bool counts_table;
};

constexpr std::array<ClaimInfo, 9> kClaims{{
    {Claim::lemma_west, "lemma_west", false, -1, 10, false, true, true},
    {Claim::eq3_even, "eq3_even", true, 0, 12, false, true, true},
    {Claim::eq4_alln, "eq4_alln", true, -1, 10, false, true, true},
    {Claim::corollary_odd, "corollary_odd", true, 1, 11, false, false, true},
    {Claim::roundtrip_f, "roundtrip_f", false, -1, 10, false, false, true},
    {Claim::roundtrip_g, "roundtrip_g", false, -1, 10, false, false, true},
    {Claim::peak_law, "peak_law", true, 0, 12, false, false, false},
    {Claim::valley_law, "valley_law", true, -1, 10, false, false, false},
    {Claim::conjugation_fg, "conjugation_fg", false, -1, 10, true, false, false},
}};

const ClaimInfo& info(Claim c) {
  for (const auto& i : kClaims)
    if (i.claim == c) return i;
  throw std::logic_error("unknown claim");
}

bool parity_matches(const ClaimInfo& ci, int n) { return ci.parity < 0 || n % 2 == ci.parity; }

bool uses_corank_map(Claim c) { return c == Claim::eq4_alln || c == Claim::roundtrip_g; }

std::string str(const std::vector<Entry>& v) { return to_string(PermView(v)); }

bool equal(PermView a, PermView b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

}  // namespace

std::string to_string(Claim c) { return info(c).name; }

Claim claim_from_string(std::string_view name) {
  for (const auto& i : kClaims)
    if (name == i.name) return i.claim;
  throw std::invalid_argument("unknown claim '" + std::string(name) + "'; valid claims: " +
                              claim_vocabulary());
}

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> v;
    for (const auto& i : kClaims) v.push_back(i.claim);
    return v;
  }();
  return claims;
}

std::string claim_vocabulary() {
  std::string out;
  for (const auto& i : kClaims) {
    if (!out.empty()) out += ", ";
    out += i.name;
  }
  return out;
}

bool is_exploratory(Claim c) { return info(c).exploratory; }
int max_length_for(Claim c) { return info(c).max_n; }

std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "verified") return Status::verified;
  if (s == "counterexample") return Status::counterexample;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

std::uint64_t encode(PermView p) {
  if (p.size() > 16) throw std::invalid_argument("encode supports n <= 16");
  std::uint64_t code = 0;
  for (Entry v : p) code = (code << 4) | static_cast<std::uint64_t>(v - 1);
  return code;
}

InstanceOutcome check_instance(Claim c, PermView p, int k, bool want_note) {
  const auto& ci = info(c);
  InstanceOutcome out;
  const int n = static_cast<int>(p.size());
  if (!parity_matches(ci, n) || (ci.alternating && !is_alternating(p))) return out;
  out.applicable = true;

  const auto ku = static_cast<std::size_t>(k);
  const std::string ps = to_string(p);
  auto fail = [&](const std::string& msg) {
    if (out.holds) out.note = msg;
    out.holds = false;
  };
  out.in_left = lis_length(p) < ku;

  switch (c) {
    case Claim::lemma_west:
    case Claim::roundtrip_f:
    case Claim::eq3_even:
    case Claim::corollary_odd:
    case Claim::eq4_alln:
    case Claim::roundtrip_g: {
      const bool corank = uses_corank_map(c);
      const char* fname = corank ? "g" : "f";
      const auto target = corank ? corank_target_pattern(ku) : west_target_pattern(ku);
      const auto forward = corank ? corank_forward_into : west_forward_into;
      const auto inverse = corank ? corank_inverse_into : west_inverse_into;
      out.in_right = avoids(p, target);
      std::vector<Entry> image, back;

      if (out.in_left) {
        forward(p, k, image);
        const std::string img = str(image);
        if (contains_pattern(image, target))
          fail(std::string(fname) + "(" + ps + ")=" + img + " contains " + to_string(target));
        inverse(image, k, back);
        if (!equal(back, p))
          fail(std::string(fname) + "^-1(" + fname + "(" + ps + "))=" + str(back));
        if (ci.cardinality) out.image_code = encode(image);
        out.notable = !equal(image, p);

        if (c == Claim::eq3_even || c == Claim::eq4_alln) {
          if (!is_alternating(image))
            fail(std::string(fname) + "(" + ps + ")=" + img + " is not alternating");
        }
        if (c == Claim::eq4_alln && n >= 1) {
          const auto coranks = corank_profile(p);
          const auto pv = peaks_and_valleys(p);
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (coranks[i] == k - 1 &&
                !std::binary_search(pv.valleys.begin(), pv.valleys.end(), i + 1))
              fail("co-rank " + std::to_string(k - 1) + " entry " + std::to_string(p[i]) +
                   " of " + ps + " is not a valley");
          }
        }
        if (c == Claim::corollary_odd) {
          out.last_entry_rank = n >= 1 && rank_profile(p).ranks.back() == k - 1;
          out.notable = out.last_entry_rank;
          if (is_alternating(image) == out.last_entry_rank)
            fail("f(" + ps + ")=" + img + (out.last_entry_rank ? " is alternating" : " is not alternating") +
                 " but the last entry has rank " + (out.last_entry_rank ? "" : "< ") + std::to_string(k - 1));
        }
        if (out.holds && out.notable && want_note) {
          out.note = std::string(fname) + "(" + ps + ")=" + img;
          if (c == Claim::corollary_odd)
            out.note += " is not alternating; last entry has rank " + std::to_string(k - 1);
        }
      }

      if (out.in_right) {
        inverse(p, k, image);
        const std::string pre = str(image);
        if (lis_length(image) >= ku)
          fail(std::string(fname) + "^-1(" + ps + ")=" + pre + " contains " +
               to_string(increasing_pattern(ku)));
        forward(image, k, back);
        if (!equal(back, p))
          fail(std::string(fname) + "(" + fname + "^-1(" + ps + "))=" + str(back));
        if (ci.alternating && !is_alternating(image))
          fail(std::string(fname) + "^-1(" + ps + ")=" + pre + " is not alternating");
      }
      break;
    }

    case Claim::peak_law: {
      if (!out.in_left || n == 0) break;
      const auto ranks = rank_profile(p);
      const auto pv = peaks_and_valleys(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (ranks[i] == k - 1 && !std::binary_search(pv.peaks.begin(), pv.peaks.end(), i + 1))
          fail("rank " + std::to_string(k - 1) + " entry " + std::to_string(p[i]) + " of " + ps +
               " is not a peak");
      }
      break;
    }

    case Claim::valley_law: {
      if (!out.in_left || n == 0) break;
      const auto coranks = corank_profile(p);
      const auto pv = peaks_and_valleys(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (coranks[i] == k - 1 &&
            !std::binary_search(pv.valleys.begin(), pv.valleys.end(), i + 1))
          fail("co-rank " + std::to_string(k - 1) + " entry " + std::to_string(p[i]) + " of " +
               ps + " is not a valley");
      }
      break;
    }

    case Claim::conjugation_fg: {
      if (!out.in_left) break;
      std::vector<Entry> g, rc, f, conj;
      corank_forward_into(p, k, g);
      reverse_complement_into(p, rc);
      west_forward_into(rc, k, f);
      reverse_complement_into(f, conj);
      out.notable = !equal(g, p);
      if (g != conj)
        fail("g(" + ps + ")=" + str(g) + " but rc(f(rc(" + ps + ")))=" + str(conj));
      else if (out.notable && want_note)
        out.note = "g(" + ps + ")=" + str(g) + "=rc(f(rc(" + ps + ")))";
      break;
    }
  }
  return out;
}

bool witness_refails(Claim c, const Witness& w) {
  return !check_instance(c, w.perm, w.k, false).holds;
}

namespace {

struct Partial {
  Count left = 0;
  Count right = 0;
  Count last_entry = 0;
  Count instances = 0;
  std::vector<std::uint64_t> images;
  std::vector<Witness> failures;
  std::vector<Witness> examples;
};

Partial sweep_class(Claim c, int n, int k, Entry first) {
  Partial acc;
  auto visit = [&](PermView p) {
    const bool want = acc.examples.size() < kWitnessCap;
    auto o = check_instance(c, p, k, want);
    if (!o.applicable) return;
    ++acc.instances;
    acc.left += o.in_left;
    acc.right += o.in_right;
    acc.last_entry += o.last_entry_rank;
    if (o.image_code) acc.images.push_back(*o.image_code);
    if (!o.holds) {
      if (acc.failures.size() < kWitnessCap)
        acc.failures.push_back({Permutation({p.begin(), p.end()}), k, std::move(o.note)});
    } else if (o.notable && want) {
      acc.examples.push_back({Permutation({p.begin(), p.end()}), k, std::move(o.note)});
    }
  };
  if (info(c).alternating)
    for_each_alternating_with_first(n, first, visit);
  else
    for_each_permutation_with_first(n, first, visit);
  return acc;
}

void append_capped(std::vector<Witness>& to, std::vector<Witness>& from) {
  for (auto& w : from) {
    if (to.size() >= kWitnessCap) return;
    to.push_back(std::move(w));
  }
}

void validate_claim_args(Claim c, NRange range, const std::vector<int>& k_set) {
  const auto& ci = info(c);
  if (range.min < 0 || range.max < range.min)
    throw std::invalid_argument("invalid n range " + std::to_string(range.min) + ".." +
                                std::to_string(range.max));
  if (range.max > ci.max_n)
    throw std::invalid_argument(std::string(ci.name) + " supports n <= " + std::to_string(ci.max_n) +
                                ", got " + std::to_string(range.max));
  if (k_set.empty()) throw std::invalid_argument("k set is empty");
  for (int k : k_set)
    if (k < 3 || k > kMaxLength)
      throw std::invalid_argument("k must lie in 3.." + std::to_string(kMaxLength) + ", got " +
                                  std::to_string(k));
}

}  // namespace

VerificationReport check_claim(Claim c, NRange range, const std::vector<int>& k_set, int jobs) {
  validate_claim_args(c, range, k_set);
  const auto& ci = info(c);
  VerificationReport report;
  report.claim = c;
  report.n_range = range;
  report.k_set = k_set;
  report.exploratory = ci.exploratory;

  std::vector<Witness> failures, examples;
  std::vector<std::string> aggregate_failures;
  bool any_cell = false;

  for (int n = range.min; n <= range.max; ++n) {
    if (!parity_matches(ci, n)) continue;
    any_cell = true;
    for (int k : k_set) {
      auto parts = map_first_entry_classes<Partial>(
          n, jobs, [&](Entry first) { return sweep_class(c, n, k, first); });
      Partial cell;
      for (auto& part : parts) {
        cell.left += part.left;
        cell.right += part.right;
        cell.last_entry += part.last_entry;
        cell.instances += part.instances;
        cell.images.insert(cell.images.end(), part.images.begin(), part.images.end());
        append_capped(failures, part.failures);
        append_capped(examples, part.examples);
      }
      report.instances += cell.instances;
      const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";

      if (ci.cardinality) {
        std::sort(cell.images.begin(), cell.images.end());
        const auto distinct = static_cast<Count>(
            std::unique(cell.images.begin(), cell.images.end()) - cell.images.begin());
        if (distinct != cell.left)
          aggregate_failures.push_back(where + "map is not injective (" + std::to_string(distinct) +
                                       " images for " + std::to_string(cell.left) + " inputs)");
        if (cell.left != cell.right)
          aggregate_failures.push_back(where + "counts differ " + std::to_string(cell.left) +
                                       " vs " + std::to_string(cell.right));
      }

      if (ci.counts_table) {
        const auto ku = static_cast<std::size_t>(k);
        const auto method = ci.alternating ? CountMethod::pruned_alternating : CountMethod::exhaustive;
        CountRow row{
            {n, increasing_pattern(ku), ci.alternating, cell.left, method},
            {n, uses_corank_map(c) ? corank_target_pattern(ku) : west_target_pattern(ku),
             ci.alternating, cell.right, method},
            std::nullopt};
        if (c == Claim::corollary_odd) {
          const Count stat = count_last_entry_rank(n, k, jobs);
          row.last_entry_rank = stat;
          if (cell.left < cell.right)
            aggregate_failures.push_back(where + "A_n(source) < A_n(target)");
          else if (cell.left - cell.right != stat || stat != cell.last_entry)
            aggregate_failures.push_back(where + "difference " + std::to_string(cell.left - cell.right) +
                                         " != last-entry-rank count " + std::to_string(stat));
        }
        report.counts_table.push_back(std::move(row));
      }
    }
  }

  if (!any_cell) {
    report.status = Status::skipped;
    report.notes.push_back("no n in " + std::to_string(range.min) + ".." + std::to_string(range.max) +
                           " has the parity this claim requires");
    return report;
  }

  report.notes = aggregate_failures;
  if (!failures.empty()) {
    report.status = Status::counterexample;
    report.witnesses = std::move(failures);
    if (ci.exploratory) report.notes.push_back("exploratory claim; counterexamples do not fail the suite");
  } else if (!aggregate_failures.empty()) {
    // Round trips in both directions force equal counts, so a count mismatch
    // without a failing instance means the sweep itself is broken.
    throw std::logic_error(to_string(c) + ": " + aggregate_failures.front());
  } else {
    report.status = Status::verified;
    report.witnesses = std::move(examples);
  }
  if (range.min == 0 && parity_matches(ci, 0))
    report.notes.push_back("n=0 counts the empty permutation as one alternating avoider");
  return report;
}

VerificationReport check_lemma_west(NRange range, const std::vector<int>& k_set, int jobs) {
  return check_claim(Claim::lemma_west, range, k_set, jobs);
}

VerificationReport check_even_equality(NRange range, const std::vector<int>& k_set, int jobs) {
  return check_claim(Claim::eq3_even, range, k_set, jobs);
}

VerificationReport check_odd_discrepancy(NRange range, const std::vector<int>& k_set, int jobs) {
  return check_claim(Claim::corollary_odd, range, k_set, jobs);
}

VerificationReport check_corank_equality(NRange range, const std::vector<int>& k_set, int jobs) {
  return check_claim(Claim::eq4_alln, range, k_set, jobs);
}

void validate(const SuiteConfig& config) {
  if (config.claims.empty()) throw std::invalid_argument("no claims selected");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  for (Claim c : config.claims) validate_claim_args(c, config.n_range, config.k_set);
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  validate(config);
  std::vector<VerificationReport> reports;
  for (Claim c : config.claims) reports.push_back(check_claim(c, config.n_range, config.k_set, config.jobs));
  return reports;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.status == Status::counterexample && !r.exploratory;
  });
}

}  // namespace permpat
