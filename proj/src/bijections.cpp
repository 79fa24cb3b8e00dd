#include "permpat/bijections.hpp"

#include <algorithm>
#include <functional>

namespace permpat {

namespace {

void require_k(int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(k));
}

void require_avoids(const Permutation& p, const Pattern& q) {
  if (auto occ = find_occurrence(p, q)) {
    std::vector<std::size_t> positions;
    std::string values;
    for (std::size_t i : *occ) {
      positions.push_back(i + 1);
      if (!values.empty()) values += ',';
      values += std::to_string(p[i]);
    }
    throw PreconditionViolation("input " + to_string(p) + " contains " + to_string(q) +
                                    " (values " + values + ")",
                                q, std::move(positions));
  }
}

// Positions are 0-based here; the trace converts to 1-based.
void record(BijectionTrace* trace, const std::vector<std::size_t>& slots, PermView source,
            const std::vector<std::pair<std::size_t, Entry>>& fills) {
  if (!trace) return;
  for (std::size_t s : slots) {
    trace->moved_positions.push_back(s + 1);
    trace->moved_values.push_back(source[s]);
  }
  std::sort(trace->moved_values.begin(), trace->moved_values.end());
  for (auto [pos, v] : fills) trace->assignments.emplace_back(pos + 1, v);
}

void west_forward_impl(PermView p, int k, std::vector<Entry>& out, BijectionTrace* trace) {
  const auto ranks = rank_profile(p);
  out.assign(p.begin(), p.end());
  std::vector<std::size_t> slots;
  std::vector<Entry> pool;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (ranks[i] == k - 1) {
      slots.push_back(i);
      pool.push_back(p[i]);
    }
  }
  if (slots.empty()) {
    record(trace, slots, p, {});
    return;
  }
  std::sort(pool.begin(), pool.end());
  std::vector<bool> used(pool.size(), false);
  std::vector<std::pair<std::size_t, Entry>> fills;

  Entry floor = 0;
  bool have_floor = false;
  std::size_t next_slot = 0;
  for (std::size_t i = 0; i < p.size() && next_slot < slots.size(); ++i) {
    if (ranks[i] == k - 2) {
      floor = p[i];
      have_floor = true;
    }
    if (i != slots[next_slot]) continue;
    ++next_slot;
    if (!have_floor) throw std::logic_error("rank k-1 entry without a rank k-2 entry to its left");
    std::size_t pick = pool.size();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!used[j] && pool[j] > floor) {
        pick = j;
        break;
      }
    }
    if (pick == pool.size()) throw std::logic_error("no eligible value for west fill");
    used[pick] = true;
    out[i] = pool[pick];
    if (trace) fills.emplace_back(i, pool[pick]);
  }
  record(trace, slots, p, fills);
}

void corank_forward_impl(PermView p, int k, std::vector<Entry>& out, BijectionTrace* trace) {
  const auto coranks = corank_profile(p);
  out.assign(p.begin(), p.end());
  std::vector<std::size_t> slots;
  std::vector<Entry> pool;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (coranks[i] == k - 1) {
      slots.push_back(i);
      pool.push_back(p[i]);
    }
  }
  if (slots.empty()) {
    record(trace, slots, p, {});
    return;
  }
  std::sort(pool.begin(), pool.end(), std::greater<Entry>{});
  std::vector<bool> used(pool.size(), false);
  std::vector<std::pair<std::size_t, Entry>> fills;

  Entry ceiling = 0;
  bool have_ceiling = false;
  std::size_t remaining = slots.size();
  for (std::size_t i = p.size(); i-- > 0 && remaining > 0;) {
    if (coranks[i] == k - 2) {
      ceiling = p[i];
      have_ceiling = true;
    }
    if (coranks[i] != k - 1) continue;
    --remaining;
    if (!have_ceiling)
      throw std::logic_error("co-rank k-1 entry without a co-rank k-2 entry to its right");
    std::size_t pick = pool.size();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!used[j] && pool[j] < ceiling) {
        pick = j;
        break;
      }
    }
    if (pick == pool.size()) throw std::logic_error("no eligible value for co-rank fill");
    used[pick] = true;
    out[i] = pool[pick];
    if (trace) fills.emplace_back(i, pool[pick]);
  }
  record(trace, slots, p, fills);
}

// Both inverses: entries whose statistic reaches k-1 are rewritten into
// their own slots, largest first.
template <typename Profile>
void decreasing_refill(PermView q, const Profile& stat, int k, std::vector<Entry>& out,
                       BijectionTrace* trace) {
  out.assign(q.begin(), q.end());
  std::vector<std::size_t> slots;
  std::vector<Entry> pool;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (stat[i] >= k - 1) {
      slots.push_back(i);
      pool.push_back(q[i]);
    }
  }
  std::sort(pool.begin(), pool.end(), std::greater<Entry>{});
  std::vector<std::pair<std::size_t, Entry>> fills;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    out[slots[j]] = pool[j];
    if (trace) fills.emplace_back(slots[j], pool[j]);
  }
  record(trace, slots, q, fills);
}

}  // namespace

void west_forward_into(PermView p, int k, std::vector<Entry>& out) {
  west_forward_impl(p, k, out, nullptr);
}

void west_inverse_into(PermView q, int k, std::vector<Entry>& out) {
  decreasing_refill(q, rank_profile(q), k, out, nullptr);
}

void corank_forward_into(PermView p, int k, std::vector<Entry>& out) {
  corank_forward_impl(p, k, out, nullptr);
}

void corank_inverse_into(PermView q, int k, std::vector<Entry>& out) {
  decreasing_refill(q, corank_profile(q), k, out, nullptr);
}

BijectionResult west_forward(const Permutation& p, int k) {
  require_k(k);
  require_avoids(p, increasing_pattern(static_cast<std::size_t>(k)));
  BijectionTrace trace;
  std::vector<Entry> out;
  west_forward_impl(p, k, out, &trace);
  return {Permutation(std::move(out)), std::move(trace)};
}

BijectionResult west_inverse(const Permutation& q, int k) {
  require_k(k);
  require_avoids(q, west_target_pattern(static_cast<std::size_t>(k)));
  BijectionTrace trace;
  std::vector<Entry> out;
  decreasing_refill(q, rank_profile(q), k, out, &trace);
  return {Permutation(std::move(out)), std::move(trace)};
}

BijectionResult corank_forward(const Permutation& p, int k) {
  require_k(k);
  require_avoids(p, increasing_pattern(static_cast<std::size_t>(k)));
  BijectionTrace trace;
  std::vector<Entry> out;
  corank_forward_impl(p, k, out, &trace);
  return {Permutation(std::move(out)), std::move(trace)};
}

BijectionResult corank_inverse(const Permutation& q, int k) {
  require_k(k);
  require_avoids(q, corank_target_pattern(static_cast<std::size_t>(k)));
  BijectionTrace trace;
  std::vector<Entry> out;
  decreasing_refill(q, corank_profile(q), k, out, &trace);
  return {Permutation(std::move(out)), std::move(trace)};
}

}  // namespace permpat
