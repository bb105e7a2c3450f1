#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "ttsched/rng.hpp"
#include "ttsched/schemes.hpp"

using namespace ttsched;

namespace {

std::vector<std::string> strings_of(const SequenceSet& set) {
  std::vector<std::string> out;
  for (const auto& s : set.schedules) out.push_back(s.to_string());
  return out;
}

// C(n, k) with plain 64-bit arithmetic, safe for the sizes used here.
unsigned long long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  unsigned long long v = 1;
  k = std::min(k, n - k);
  for (long i = 1; i <= k; ++i) v = v * static_cast<unsigned long long>(n - k + i) /
                                    static_cast<unsigned long long>(i);
  return v;
}

}  // namespace

TEST_CASE("tdma sequence sets are the identity pattern") {
  const auto set3 = tdma_sequences(3);
  CHECK(strings_of(set3) == std::vector<std::string>{"100", "010", "001"});

  const auto set1 = tdma_sequences(1);
  CHECK(strings_of(set1) == std::vector<std::string>{"1"});

  const auto set5 = tdma_sequences(5);
  REQUIRE(set5.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(set5.schedules[i].weight() == 1);
    std::vector<Schedule> others;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != i) others.push_back(set5.schedules[j]);
    CHECK_FALSE(blocked(set5.schedules[i], others));
  }
}

TEST_CASE("tdma schedules are never blocked, any pair count") {
  for (long n : {2L, 7L, 33L, 64L}) {
    const auto set = tdma_sequences(n);
    bool ok = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::vector<Schedule> others;
      for (std::size_t j = 0; j < set.size(); ++j)
        if (j != i) others.push_back(set.schedules[j]);
      ok &= set.schedules[i].weight() == 1 && !blocked(set.schedules[i], others);
    }
    CHECK(ok);
  }
}

TEST_CASE("gf_params examples") {
  const auto p14 = gf_params(1, 4);
  CHECK(p14.q == 2);
  CHECK(p14.k == 1);
  CHECK(gf_params(4, 100).q == 9);
  CHECK(gf_params(13, 100).q == 16);
}

TEST_CASE("gf_params q is non-decreasing in density") {
  for (long n : {10L, 50L, 100L}) {
    unsigned prev = 0;
    for (int d = 1; d <= 30; ++d) {
      const unsigned q = gf_params(d, n).q;
      CHECK(q >= prev);
      prev = q;
    }
  }
}

TEST_CASE("tdma beats the gf period once density exceeds sqrt(2N)") {
  for (long n = 2; n <= 120; ++n) {
    const int d_low = static_cast<int>(std::floor(std::sqrt(2.0 * n))) + 1;
    for (int d = d_low; d <= d_low + 5; ++d) {
      const auto params = gf_params(d, n);
      INFO("n = " << n << ", d = " << d);
      CHECK(static_cast<long>(params.q) * params.q > n);
    }
  }
}

TEST_CASE("gf period vs tdma period crosses over at N = 9..10 for density 1") {
  // The reference table has q^2(1,N) >= N up to N = 9 (equality at N = 4,
  // where q = 2 and q^2 = 4, and at N = 9) and strictly below from N = 10.
  for (long n = 1; n <= 9; ++n) {
    const auto params = gf_params(1, n);
    const long period = static_cast<long>(params.q) * params.q;
    INFO("n = " << n);
    CHECK(period >= n);
    if (n == 4 || n == 9)
      CHECK(period == n);
    else
      CHECK(period > n);
  }
  for (long n = 10; n <= 2000; ++n) {
    const auto params = gf_params(1, n);
    INFO("n = " << n);
    CHECK(static_cast<long>(params.q) * params.q < n);
  }
}

TEST_CASE("gf sequence construction reproduces the reference set for N=4, D=1") {
  const auto set = gf_sequences(1, 4);
  CHECK(set.period == 4);
  CHECK(set.space_size == 4);
  CHECK(strings_of(set) == std::vector<std::string>{"1010", "0101", "1001", "0110"});
}

TEST_CASE("gf sequences degenerate cases") {
  const auto set = gf_sequences(1, 1);
  REQUIRE(set.size() == 1);
  CHECK(set.period == 4);
  CHECK(set.schedules[0].to_string() == "1010");
}

TEST_CASE("gf sequences: weight q, pairwise overlap <= k, unblocked by any D others") {
  const auto set = gf_sequences(2, 9);
  REQUIRE(set.gf.q == 3);
  REQUIRE(set.gf.k == 1);
  CHECK(set.period == 9);
  for (const auto& s : set.schedules) CHECK(s.weight() == 3);

  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      int overlap = 0;
      for (long t = 1; t <= set.period; ++t)
        if (set.schedules[a].bit(t) && set.schedules[b].bit(t)) ++overlap;
      CHECK(overlap <= static_cast<int>(set.gf.k));
    }
  }

  // Exhaustive over all subsets of at most D = 2 other schedules.
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t a = 0; a < set.size(); ++a) {
      if (a == i) continue;
      CHECK_FALSE(blocked(set.schedules[i], std::vector<Schedule>{set.schedules[a]}));
      for (std::size_t b = a + 1; b < set.size(); ++b) {
        if (b == i) continue;
        CHECK_FALSE(blocked(set.schedules[i],
                            std::vector<Schedule>{set.schedules[a], set.schedules[b]}));
      }
    }
  }
}

TEST_CASE("gf sequences: randomized blocking spot-check at larger sizes") {
  const int density = 10;
  const auto set = gf_sequences(density, 50);
  REQUIRE(set.gf.q == 11);
  Rng rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    const auto i = static_cast<std::size_t>(rng.uniform_index(set.size()));
    std::vector<Schedule> others;
    std::set<std::size_t> chosen;
    while (others.size() < static_cast<std::size_t>(density)) {
      const auto j = static_cast<std::size_t>(rng.uniform_index(set.size()));
      if (j != i && chosen.insert(j).second) others.push_back(set.schedules[j]);
    }
    CHECK_FALSE(blocked(set.schedules[i], others));
  }
}

TEST_CASE("combination_min_length examples") {
  CHECK(combination_min_length(10) == 5);
  CHECK(combination_min_length(1) == 1);
  CHECK(combination_min_length(70) == 8);
  // Independent check against the directly computed central binomials.
  for (long n = 1; n <= 300; ++n) {
    long expected = 1;
    while (choose(expected, (expected + 1) / 2) < static_cast<unsigned long long>(n)) ++expected;
    CHECK(combination_min_length(n) == expected);
  }
}

TEST_CASE("combination sequences reproduce the reference set for N=10") {
  const auto set = combination_sequences(10);
  CHECK(set.period == 5);
  CHECK(strings_of(set) == std::vector<std::string>{"00111", "01011", "01101", "01110", "10011",
                                                    "10101", "10110", "11001", "11010", "11100"});
}

TEST_CASE("combination sequences small cases") {
  CHECK(strings_of(combination_sequences(1)) == std::vector<std::string>{"1"});
  CHECK(strings_of(combination_sequences(3)) == std::vector<std::string>{"011", "101", "110"});
}

TEST_CASE("combination sequences form an equal-weight antichain, pairwise unblocked") {
  const auto set = combination_sequences(200);
  const int expected_weight = static_cast<int>((set.period + 1) / 2);
  bool ok = true;
  for (std::size_t a = 0; a < set.size(); ++a) {
    ok &= set.schedules[a].weight() == expected_weight;
    for (std::size_t b = 0; b < set.size(); ++b) {
      if (a == b) continue;
      // Support of a never contained in support of b.
      bool subset = true;
      for (long t = 1; t <= set.period; ++t)
        if (set.schedules[a].bit(t) && !set.schedules[b].bit(t)) subset = false;
      ok &= !subset;
      ok &= !blocked(set.schedules[a], std::vector<Schedule>{set.schedules[b]});
    }
  }
  CHECK(ok);
}

TEST_CASE("combination period is the shortest of the three schemes for density 1") {
  for (long n = 1; n <= 1000; ++n) {
    const auto params = gf_params(1, n);
    const long gf_period = static_cast<long>(params.q) * params.q;
    CHECK(combination_min_length(n) <= std::min(n, gf_period));
  }
}

TEST_CASE("aloha transmit probability") {
  CHECK(aloha_probability(1).delta == Catch::Approx(0.5));
  CHECK(aloha_probability(3).delta == Catch::Approx(0.25));
  CHECK(aloha_probability(9).delta == Catch::Approx(0.1));
}

TEST_CASE("blocked predicate") {
  const Schedule s10({1, 0});
  const Schedule s01({0, 1});
  CHECK_FALSE(blocked(s10, std::vector<Schedule>{s01}));

  const Schedule a({1, 0, 1, 0});
  const Schedule b({0, 1, 0, 1});
  CHECK_FALSE(blocked(a, std::vector<Schedule>{b}));

  const Schedule s({1, 1, 0});
  CHECK(blocked(s, std::vector<Schedule>{Schedule({1, 0, 0}), Schedule({0, 1, 0})}));

  CHECK_THROWS_AS(blocked(s10, std::vector<Schedule>{s}), PeriodMismatchError);
}

TEST_CASE("schedule_from_space extends beyond the assigned prefix") {
  const auto set = gf_sequences(10, 50);
  REQUIRE(set.space_size == 121);
  std::set<std::string> seen;
  for (unsigned long long i = 0; i < set.space_size; ++i)
    seen.insert(schedule_from_space(set, i).to_string());
  CHECK(seen.size() == 121);  // all distinct
  CHECK_THROWS_AS(schedule_from_space(set, 121), std::out_of_range);

  const auto comb = combination_sequences(10);
  for (unsigned long long i = 0; i < 10; ++i)
    CHECK(schedule_from_space(comb, i) == comb.schedules[static_cast<std::size_t>(i)]);
}
