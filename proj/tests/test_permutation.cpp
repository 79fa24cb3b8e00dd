#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permpat/permutation.hpp"

using namespace permpat;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<int> ranks_of(const RankProfile& r) { return r.ranks; }

}  // namespace

TEST_CASE("make_permutation validates") {
  const auto p = make_permutation({2, 5, 3, 7, 1, 6, 4});
  CHECK(to_string(p) == "2537164");
  CHECK(p.size() == 7);
  CHECK(p.at1(1) == 2);

  const auto empty = make_permutation({});
  CHECK(empty.size() == 0);
  CHECK(to_string(empty).empty());

  try {
    make_permutation({1, 1, 2});
    FAIL("expected duplicate rejection");
  } catch (const InvalidPermutation& e) {
    CHECK(e.offending_value() == 1);
    CHECK(std::string(e.what()).find("duplicate value 1") != std::string::npos);
  }
  CHECK_THROWS_AS(make_permutation({1, 4, 2}), InvalidPermutation);
  CHECK_THROWS_AS(make_permutation({0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(make_permutation({2, 3}), InvalidPermutation);
}

TEST_CASE("text form") {
  CHECK(P("893624751").values() == std::vector<int>{8, 9, 3, 6, 2, 4, 7, 5, 1});
  CHECK(P(" 3,1,2 ").values() == std::vector<int>{3, 1, 2});
  const auto big = P("10,2,7,1,3,4,5,6,8,9");
  CHECK(big.size() == 10);
  CHECK(to_string(big) == "10,2,7,1,3,4,5,6,8,9");
  CHECK(to_string(P("2,1")) == "21");
  CHECK_THROWS_AS(P("12a"), std::invalid_argument);
  CHECK_THROWS_AS(P("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(P("10"), InvalidPermutation);  // digits 1 and 0
  CHECK(P("").empty());
}

TEST_CASE("standard patterns") {
  CHECK(to_string(increasing_pattern(4)) == "1234");
  CHECK(to_string(west_target_pattern(4)) == "1243");
  CHECK(to_string(west_target_pattern(3)) == "132");
  CHECK(to_string(corank_target_pattern(4)) == "2134");
  CHECK(to_string(corank_target_pattern(3)) == "213");
}

TEST_CASE("containment examples") {
  const auto p = P("2537164");
  CHECK_FALSE(contains_pattern(p, P("1234")));
  CHECK(avoids(p, P("1234")));
  CHECK(contains_pattern(p, P("123")));
  const auto occ = find_occurrence(p, P("123"));
  REQUIRE(occ);
  CHECK(p[(*occ)[0]] < p[(*occ)[1]]);
  CHECK(p[(*occ)[1]] < p[(*occ)[2]]);
  CHECK_FALSE(contains_pattern(P("12"), P("123")));
  CHECK_FALSE(avoids(P("123"), P("123")));
  CHECK(avoids(P("23154"), P("1234")));
  CHECK(contains_pattern(P("4231"), P("321")));
  CHECK(contains_pattern(P("25314"), P("2413")));
  CHECK_FALSE(contains_pattern(P("1234"), P("21")));
}

TEST_CASE("containment agrees with subset enumeration") {
  for (int n = 0; n <= 6; ++n) {
    const auto perms = oracle::permutations(n);
    for (int k = 1; k <= 4; ++k) {
      for (const auto& q : oracle::permutations(k)) {
        for (const auto& p : perms) {
          const bool expected = oracle::contains(p, q);
          REQUIRE(contains_pattern(p, q) == expected);
          REQUIRE(find_occurrence(p, q).has_value() == expected);
        }
      }
    }
  }
}

TEST_CASE("lis_length") {
  CHECK(lis_length(Permutation::identity(9)) == 9);
  CHECK(lis_length(P("321")) == 1);
  CHECK(lis_length(P("2537164")) == 3);
  CHECK(lis_length(P("")) == 0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_permutation(1 + trial % 80, rng);
    REQUIRE(static_cast<int>(lis_length(p)) == oracle::lis_quadratic(p));
  }
}

TEST_CASE("rank_profile") {
  CHECK(ranks_of(rank_profile(P("3526174"))) == std::vector<int>{1, 2, 1, 3, 1, 4, 2});
  CHECK(ranks_of(rank_profile(P("321"))) == std::vector<int>{1, 1, 1});

  const auto p = P("47581623");
  const auto r = rank_profile(p);
  std::vector<int> rank3;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (r[i] == 3) rank3.push_back(p[i]);
  CHECK(rank3 == std::vector<int>{8, 6, 3});
}

TEST_CASE("corank_profile") {
  CHECK(corank_profile(P("2413")).coranks == std::vector<int>{2, 1, 2, 1});
  CHECK(corank_profile(Permutation::identity(5)).coranks == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(corank_profile(P("321")).coranks == std::vector<int>{1, 1, 1});
}

TEST_CASE("rank and co-rank agree with subset enumeration") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : oracle::permutations(n)) {
      REQUIRE(rank_profile(p).ranks == oracle::ranks_by_subsets(p, false));
      REQUIRE(corank_profile(p).coranks == oracle::ranks_by_subsets(p, true));
    }
  }
}

TEST_CASE("rank invariants on random permutations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = Permutation(oracle::random_permutation(1 + trial % 60, rng));
    const auto r = rank_profile(p);
    const auto c = corank_profile(p);
    const auto lis = static_cast<int>(lis_length(p));
    REQUIRE(r.max() == lis);
    REQUIRE(c.max() == lis);

    // Entries sharing a rank (or co-rank) decrease left to right.
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (r[i] == r[j]) REQUIRE(p[i] > p[j]);
        if (c[i] == c[j]) REQUIRE(p[i] > p[j]);
      }
    }

    // Co-rank is rank read through the reverse-complement.
    const auto rc = rank_profile(reverse_complement(p));
    const auto n = p.size();
    for (std::size_t i = 0; i < n; ++i) REQUIRE(c[i] == rc[n - 1 - i]);

    REQUIRE(reverse_complement(reverse_complement(p)) == p);
  }
}

TEST_CASE("avoiding 12..k is the same as all ranks below k") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& v : oracle::permutations(n)) {
      const Permutation p(v);
      const int top = rank_profile(p).max();
      for (int k = 2; k <= 6; ++k) REQUIRE(avoids(p, increasing_pattern(k)) == (top <= k - 1));
    }
  }
}

TEST_CASE("is_alternating") {
  CHECK(is_alternating(P("47581623")));
  CHECK(is_alternating(P("23154")));
  CHECK_FALSE(is_alternating(P("123")));
  CHECK(is_alternating(P("")));
  CHECK(is_alternating(P("1")));
  CHECK_FALSE(is_alternating(P("21")));

  // Ascent set equals the odd positions below n.
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : oracle::permutations(n)) {
      bool odd_ascents = true;
      for (std::size_t pos = 1; pos < p.size(); ++pos)
        odd_ascents = odd_ascents && ((p[pos - 1] < p[pos]) == (pos % 2 == 1));
      REQUIRE(is_alternating(p) == odd_ascents);
    }
  }
}

TEST_CASE("peaks_and_valleys") {
  const auto pv = peaks_and_valleys(P("47581623"));
  CHECK(pv.valleys == std::vector<std::size_t>{1, 3, 5, 7});
  CHECK(pv.peaks == std::vector<std::size_t>{2, 4, 6, 8});
  CHECK(pv.convention_only.empty());

  const auto two = peaks_and_valleys(P("12"));
  CHECK(two.valleys == std::vector<std::size_t>{1});
  CHECK(two.peaks == std::vector<std::size_t>{2});

  const auto odd = peaks_and_valleys(P("132"));
  CHECK(odd.valleys == std::vector<std::size_t>{1});
  CHECK(odd.peaks == std::vector<std::size_t>{2, 3});
  CHECK(odd.convention_only == std::vector<std::size_t>{3});

  const auto structural = peaks_and_valleys(P("132"), EndpointConvention::structural);
  CHECK(structural.valleys == std::vector<std::size_t>{1, 3});
  CHECK(structural.peaks == std::vector<std::size_t>{2});

  const auto single = peaks_and_valleys(P("1"));
  CHECK(single.valleys == std::vector<std::size_t>{1});
  CHECK(single.peaks.empty());

  CHECK_THROWS_AS(peaks_and_valleys(P("123")), std::invalid_argument);
  CHECK_THROWS_AS(peaks_and_valleys(P("")), std::invalid_argument);
}

TEST_CASE("reverse_complement") {
  CHECK(to_string(reverse_complement(P("132"))) == "213");
  CHECK(reverse_complement(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(to_string(reverse_complement(P("1243"))) == "2134");
  CHECK(reverse_complement(P("")).empty());
}
