#include "permpat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace permpat {

namespace {

void validate(PermView values) {
  const auto n = static_cast<long long>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (Entry v : values) {
    if (v < 1 || v > n) {
      throw InvalidPermutation("value " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(n),
                               v);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("duplicate value " + std::to_string(v), v);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_increasing_pattern(PermView q) {
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != static_cast<Entry>(i + 1)) return false;
  return true;
}

bool is_decreasing_pattern(PermView q) {
  const auto k = static_cast<Entry>(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != k - static_cast<Entry>(i)) return false;
  return true;
}

// For every pattern letter a, the earlier letters whose values bracket q[a]
// most tightly. A candidate entry only has to respect those two.
struct PatternBounds {
  std::vector<int> below;  // index of largest earlier letter < q[a], or -1
  std::vector<int> above;  // index of smallest earlier letter > q[a], or -1
};

PatternBounds bounds_of(PermView q) {
  PatternBounds b;
  b.below.assign(q.size(), -1);
  b.above.assign(q.size(), -1);
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t c = 0; c < a; ++c) {
      const int ci = static_cast<int>(c);
      if (q[c] < q[a] && (b.below[a] < 0 || q[c] > q[b.below[a]])) b.below[a] = ci;
      if (q[c] > q[a] && (b.above[a] < 0 || q[c] < q[b.above[a]])) b.above[a] = ci;
    }
  }
  return b;
}

bool search_occurrence(PermView p, PermView q, const PatternBounds& bounds, std::size_t letter,
                       std::size_t start, std::vector<std::size_t>& chosen) {
  const std::size_t k = q.size();
  if (letter == k) return true;
  const std::size_t last_start = p.size() - (k - letter);
  const Entry lo = bounds.below[letter] < 0 ? 0 : p[chosen[bounds.below[letter]]];
  const Entry hi = bounds.above[letter] < 0 ? static_cast<Entry>(p.size()) + 1
                                            : p[chosen[bounds.above[letter]]];
  if (hi - lo < 2) return false;
  for (std::size_t i = start; i <= last_start; ++i) {
    const Entry v = p[i];
    if (v <= lo || v >= hi) continue;
    chosen[letter] = i;
    if (search_occurrence(p, q, bounds, letter + 1, i + 1, chosen)) return true;
  }
  return false;
}

template <typename Less>
std::size_t longest_monotone(PermView p, Less less) {
  std::vector<Entry> tails;
  tails.reserve(p.size());
  for (Entry v : p) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v, less);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return tails.size();
}

}  // namespace

Permutation::Permutation(std::vector<Entry> values) : values_(std::move(values)) {
  validate(values_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Entry> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Entry>(i + 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<Entry> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Entry>(n - i);
  return Permutation(std::move(v));
}

Permutation make_permutation(std::vector<Entry> values) { return Permutation(std::move(values)); }

bool is_permutation_of_1_to_n(PermView values) {
  try {
    validate(values);
    return true;
  } catch (const InvalidPermutation&) {
    return false;
  }
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  std::vector<Entry> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed permutation string '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
    if (values.size() > 9)
      throw std::invalid_argument("digit form is limited to n <= 9; use commas for '" +
                                  std::string(text) + "'");
    return Permutation(std::move(values));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    Entry v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw std::invalid_argument("malformed permutation string '" + std::string(text) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(values));
}

std::string to_string(PermView p) {
  std::string out;
  if (p.size() <= 9) {
    for (Entry v : p) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p[i]);
  }
  return out;
}

Pattern increasing_pattern(std::size_t k) { return Permutation::identity(k); }

Pattern west_target_pattern(std::size_t k) {
  if (k < 2) throw std::invalid_argument("west target pattern needs k >= 2");
  auto v = Permutation::identity(k).values();
  std::swap(v[k - 1], v[k - 2]);
  return Permutation(std::move(v));
}

Pattern corank_target_pattern(std::size_t k) {
  if (k < 2) throw std::invalid_argument("co-rank target pattern needs k >= 2");
  auto v = Permutation::identity(k).values();
  std::swap(v[0], v[1]);
  return Permutation(std::move(v));
}

std::optional<std::vector<std::size_t>> find_occurrence(PermView p, PermView q) {
  if (q.size() > p.size()) return std::nullopt;
  std::vector<std::size_t> chosen(q.size());
  if (q.empty()) return chosen;
  if (search_occurrence(p, q, bounds_of(q), 0, 0, chosen)) return chosen;
  return std::nullopt;
}

bool contains_pattern(PermView p, PermView q) {
  if (q.size() > p.size()) return false;
  if (q.empty()) return true;
  if (is_increasing_pattern(q)) return lis_length(p) >= q.size();
  if (is_decreasing_pattern(q)) return lds_length(p) >= q.size();
  std::vector<std::size_t> chosen(q.size());
  return search_occurrence(p, q, bounds_of(q), 0, 0, chosen);
}

std::size_t lis_length(PermView p) { return longest_monotone(p, std::less<Entry>{}); }
std::size_t lds_length(PermView p) { return longest_monotone(p, std::greater<Entry>{}); }

int RankProfile::max() const noexcept {
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
}

int CorankProfile::max() const noexcept {
  return coranks.empty() ? 0 : *std::max_element(coranks.begin(), coranks.end());
}

RankProfile rank_profile(PermView p) {
  // tails[r] is the smallest entry ending an increasing run of length r + 1.
  RankProfile out;
  out.ranks.resize(p.size());
  std::vector<Entry> tails;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), p[i]);
    out.ranks[i] = static_cast<int>(it - tails.begin()) + 1;
    if (it == tails.end())
      tails.push_back(p[i]);
    else
      *it = p[i];
  }
  return out;
}

CorankProfile corank_profile(PermView p) {
  // heads[r] is the largest entry starting an increasing run of length r + 1
  // among the suffix scanned so far; heads is strictly decreasing.
  CorankProfile out;
  out.coranks.resize(p.size());
  std::vector<Entry> heads;
  for (std::size_t i = p.size(); i-- > 0;) {
    auto it = std::lower_bound(heads.begin(), heads.end(), p[i], std::greater<Entry>{});
    out.coranks[i] = static_cast<int>(it - heads.begin()) + 1;
    if (it == heads.end())
      heads.push_back(p[i]);
    else
      *it = p[i];
  }
  return out;
}

bool is_alternating(PermView p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const bool ascent = p[i] < p[i + 1];
    if (ascent != (i % 2 == 0)) return false;
  }
  return true;
}

PeaksAndValleys peaks_and_valleys(PermView p, EndpointConvention convention) {
  if (p.empty()) throw std::invalid_argument("peaks_and_valleys needs n >= 1");
  if (!is_alternating(p))
    throw std::invalid_argument("peaks_and_valleys needs an alternating permutation, got " +
                                to_string(p));
  PeaksAndValleys out;
  const std::size_t n = p.size();
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const bool odd = pos % 2 == 1;
    if (pos == n && odd && n > 1) {
      // Ends on a descent: structurally a valley, a peak by convention.
      if (convention == EndpointConvention::trailing_peak) {
        out.peaks.push_back(pos);
        out.convention_only.push_back(pos);
      } else {
        out.valleys.push_back(pos);
      }
      continue;
    }
    (odd ? out.valleys : out.peaks).push_back(pos);
  }
  return out;
}

void reverse_complement_into(PermView p, std::vector<Entry>& out) {
  const auto n = p.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Entry>(n) + 1 - p[n - 1 - i];
}

Permutation reverse_complement(PermView p) {
  std::vector<Entry> out;
  reverse_complement_into(p, out);
  return Permutation(std::move(out));
}

}  // namespace permpat
