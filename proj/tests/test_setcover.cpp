#include <doctest.h>

#include <cmath>

#include "turancover/errors.hpp"
#include "turancover/generators.hpp"
#include "turancover/setcover.hpp"

using namespace turancover;

TEST_CASE("simple set systems") {
  CHECK(is_simple_system(SetSystem(6, {{0, 1}, {2, 3}, {4, 5}})));
  CHECK_FALSE(is_simple_system(SetSystem(4, {{0, 1, 2}, {1, 2, 3}})));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = simplify_reduction(random_hypergraph(6, 3, 0.5, seed), 2, 2, seed);
    if (g.num_edges() == 0) continue;
    CHECK(is_simple_system(dual(g)));
  }
}

TEST_CASE("greedy basics") {
  const auto singletons = greedy_set_cover(SetSystem(4, {{0}, {1}, {2}, {3}}));
  CHECK(singletons.size() == 4);
  for (auto c : singletons.newly_covered) CHECK(c == 1);
  CHECK(singletons.uncovered_after.back() == 0);

  const auto full = greedy_set_cover(SetSystem(3, {{0}, {0, 1, 2}, {1}}));
  CHECK(full.picked == std::vector<std::size_t>{1});

  // Tie at size 2: the lower id wins.
  const auto tie = greedy_set_cover(SetSystem(4, {{2, 3}, {0, 1}}));
  CHECK(tie.picked == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(greedy_set_cover(SetSystem(3, {{0}, {1}})), ParameterError);
}

TEST_CASE("greedy trace invariants") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = random_simple_setsystem(16, 60, seed);
    const auto trace = greedy_set_cover(s);
    std::size_t remaining = s.universe_size();
    for (std::size_t i = 0; i < trace.size(); ++i) {
      CHECK(trace.newly_covered[i] > 0);
      remaining -= trace.newly_covered[i];
      CHECK(trace.uncovered_after[i] == remaining);
    }
    CHECK(remaining == 0);
  }
}

TEST_CASE("brute-force optimum") {
  CHECK(brute_force_set_cover(SetSystem(4, {{0}, {1}, {2}, {3}, {0, 1}, {2, 3}})) == 2);
  CHECK(brute_force_set_cover(SetSystem(0, {})) == 0);
  CHECK(brute_force_set_cover(greedy_hard_setsystem(4)) <= 4);
  std::vector<std::vector<Element>> many(31, std::vector<Element>{0});
  CHECK_THROWS_AS(brute_force_set_cover(SetSystem(1, many)), ResourceError);
}

TEST_CASE("hard instance lower bound") {
  const auto s = greedy_hard_setsystem(20);
  const auto trace = greedy_set_cover(s);
  CHECK(trace.size() >= 57);
  // The first m picks are the T sets, each covering ceil(s_i / k).
  std::size_t uncovered = 400;
  for (std::size_t i = 0; i < 57; ++i) {
    CHECK(trace.picked[i] == i);
    CHECK(trace.newly_covered[i] == (uncovered + 19) / 20);
    uncovered -= trace.newly_covered[i];
  }
}

TEST_CASE("ratio check") {
  const auto s = greedy_hard_setsystem(6);
  const auto opt = brute_force_set_cover(s);
  CHECK(opt == 6);
  const auto ratio = greedy_ratio_check(s, opt);
  CHECK(to_double(ratio) <= std::log(36.0) / 2 + 1);
  CHECK(simple_greedy_bound(20) == doctest::Approx(std::log(20.0) / 2 + 1));
  CHECK_THROWS_AS(greedy_ratio_check(SetSystem(4, {{0, 1, 2}, {1, 2, 3}}), 1), ParameterError);
  CHECK_THROWS_AS(greedy_ratio_check(SetSystem(2, {{0}, {1}}), 1), VerificationError);
}

TEST_CASE("sets outside a known cover are small") {
  // Observation: in a simple system with a cover of size k, every other set
  // has at most k elements, because it meets each cover set at most once.
  for (std::size_t k = 3; k <= 8; ++k) {
    const auto s = greedy_hard_setsystem(k);
    for (std::size_t i = 0; i < greedy_hard_extra_sets(k); ++i) CHECK(s.set(i).size() <= k);
  }
}

TEST_CASE("upper bound on random simple systems") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto s = random_simple_setsystem(20, 40, seed);
    if (s.num_sets() > kMaxBruteForceSets) continue;
    const auto opt = brute_force_set_cover(s);
    const auto ratio = greedy_ratio_check(s, opt);
    CHECK(to_double(ratio) <= simple_greedy_bound(20) + 1e-12);
  }
}
