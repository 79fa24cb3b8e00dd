#include <doctest.h>

#include <algorithm>

#include "permpat/report_json.hpp"
#include "permpat/verify.hpp"

using namespace permpat;

namespace {

bool has_witness(const VerificationReport& r, const char* perm, int k) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const Witness& w) { return to_string(w.perm) == perm && w.k == k; });
}

const CountRow& row(const VerificationReport& r, int n, int k) {
  for (const auto& row : r.counts_table)
    if (row.left.n == n && row.left.pattern.size() == static_cast<std::size_t>(k)) return row;
  throw std::out_of_range("no such row");
}

}  // namespace

TEST_CASE("claim vocabulary") {
  CHECK(claim_from_string("eq3_even") == Claim::eq3_even);
  CHECK(to_string(Claim::conjugation_fg) == "conjugation_fg");
  CHECK(all_claims().size() == 9);
  try {
    claim_from_string("bogus");
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("lemma_west") != std::string::npos);
  }
  CHECK(is_exploratory(Claim::conjugation_fg));
  CHECK_FALSE(is_exploratory(Claim::eq4_alln));
}

TEST_CASE("check_lemma_west") {
  const auto r = check_lemma_west(NRange::upto(8), {3, 4});
  CHECK(r.status == Status::verified);

  const auto r7 = check_lemma_west({7, 7}, {3});
  REQUIRE(r7.counts_table.size() == 1);
  CHECK(r7.counts_table[0].left.count == r7.counts_table[0].right.count);
  CHECK(r7.counts_table[0].left.count == 429);

  const auto empty = check_lemma_west({0, 0}, {3});
  CHECK(empty.status == Status::verified);
  CHECK(empty.instances == 1);
}

TEST_CASE("check_even_equality") {
  const auto r10 = check_even_equality({10, 10}, {3});
  CHECK(r10.status == Status::verified);
  CHECK(row(r10, 10, 3).left.count == 42);
  CHECK(row(r10, 10, 3).right.count == 42);

  const auto r2 = check_even_equality({2, 2}, {3});
  CHECK(row(r2, 2, 3).left.count == 1);
  CHECK(row(r2, 2, 3).right.count == 1);

  const auto r8 = check_even_equality({8, 8}, {4});
  CHECK(r8.status == Status::verified);
  CHECK(row(r8, 8, 4).left.count == 462);
}

TEST_CASE("check_odd_discrepancy") {
  const auto r3 = check_odd_discrepancy({3, 3}, {3});
  CHECK(r3.status == Status::verified);
  CHECK(row(r3, 3, 3).left.count - row(r3, 3, 3).right.count == 1);
  CHECK(row(r3, 3, 3).last_entry_rank == Count{1});

  const auto r5 = check_odd_discrepancy({5, 5}, {4});
  CHECK(r5.status == Status::verified);
  CHECK(has_witness(r5, "23154", 4));
  for (const auto& w : r5.witnesses) CHECK_FALSE(witness_refails(Claim::corollary_odd, w));

  CHECK(check_odd_discrepancy({9, 9}, {5}).status == Status::verified);
}

TEST_CASE("check_corank_equality") {
  const auto r4 = check_corank_equality({4, 4}, {3});
  CHECK(r4.status == Status::verified);
  CHECK(row(r4, 4, 3).left.count == row(r4, 4, 3).right.count);
  CHECK(has_witness(r4, "2413", 3));

  CHECK(check_corank_equality({9, 9}, {4}).status == Status::verified);
  const auto r1 = check_corank_equality({1, 1}, {3});
  CHECK(r1.status == Status::verified);
  CHECK(r1.instances == 1);
}

TEST_CASE("single instances") {
  const auto o = check_instance(Claim::eq3_even, parse_permutation("47581623"), 4);
  CHECK(o.applicable);
  CHECK(o.in_left);
  CHECK(o.holds);
  CHECK(o.note == "f(47581623)=47561823");

  CHECK_FALSE(check_instance(Claim::eq3_even, parse_permutation("23154"), 4).applicable);
  CHECK_FALSE(check_instance(Claim::eq3_even, parse_permutation("1234"), 4).applicable);

  const auto c = check_instance(Claim::corollary_odd, parse_permutation("23154"), 4);
  CHECK(c.holds);
  CHECK(c.last_entry_rank);

  CHECK(encode(parse_permutation("21")) == 0x10);
}

TEST_CASE("run_suite") {
  SuiteConfig skipped;
  skipped.claims = {Claim::eq3_even};
  skipped.n_range = {5, 5};
  const auto s = run_suite(skipped);
  REQUIRE(s.size() == 1);
  CHECK(s[0].status == Status::skipped);
  CHECK(suite_passed(s));

  SuiteConfig bad;
  bad.n_range = {0, 11};  // lemma_west caps at 10
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  bad.n_range = {4, 2};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  bad.n_range = {0, 5};
  bad.k_set = {2};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  bad.k_set = {};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);

  SuiteConfig small;
  small.n_range = {0, 6};
  small.jobs = 3;
  const auto a = run_suite(small);
  small.jobs = 1;
  const auto b = run_suite(small);
  CHECK(a == b);
  CHECK(suite_passed(a));
  for (const auto& r : a) CHECK(r.status == Status::verified);
}

TEST_CASE("suite_passed ignores exploratory counterexamples") {
  VerificationReport exploratory;
  exploratory.claim = Claim::conjugation_fg;
  exploratory.exploratory = true;
  exploratory.status = Status::counterexample;
  CHECK(suite_passed({exploratory}));

  VerificationReport real = exploratory;
  real.claim = Claim::eq3_even;
  real.exploratory = false;
  CHECK_FALSE(suite_passed({exploratory, real}));
}

TEST_CASE("reports round-trip through JSON") {
  SuiteConfig config;
  config.claims = {Claim::corollary_odd, Claim::eq4_alln, Claim::peak_law};
  config.n_range = {0, 7};
  const auto reports = run_suite(config);
  const auto text = render_reports_json(reports);
  CHECK(parse_reports_json(text) == reports);

  const auto j = nlohmann::json::parse(text);
  CHECK(j[0]["claim"] == "corollary_odd");
  CHECK(j[0]["status"] == "verified");
  CHECK(j[0]["parameters"]["n_max"] == 7);
  CHECK(j[0]["witnesses"][0]["perm"] == "132");
}
