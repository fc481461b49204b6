#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "turancover/errors.hpp"
#include "turancover/generators.hpp"
#include "turancover/oracles.hpp"
#include "turancover/setcover.hpp"

using namespace turancover;
using testing::hg;

TEST_CASE("complete hypergraphs") {
  CHECK(complete(4, 3).num_edges() == 4);
  CHECK(complete(5, 4).num_edges() == 5);
  CHECK(complete(6, 6).num_edges() == 1);
  const auto h = complete(5, 3);
  CHECK(std::is_sorted(h.edges().begin(), h.edges().end()));
}

TEST_CASE("random hypergraphs") {
  CHECK(random_hypergraph(8, 3, 0.0, 1).num_edges() == 0);
  CHECK(random_hypergraph(8, 3, 1.0, 1) == complete(8, 3));
  const double mean = 60, sigma = std::sqrt(120 * 0.25);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = static_cast<double>(random_hypergraph(10, 3, 0.5, seed).num_edges());
    CHECK(std::abs(m - mean) <= 4 * sigma);
  }
  CHECK(random_hypergraph(10, 3, 0.5, 42) == random_hypergraph(10, 3, 0.5, 42));
  CHECK_THROWS_AS(random_hypergraph(10, 3, 1.5, 0), ParameterError);

  const auto fixed = random_hypergraph_edges(300, 100, 50, 9);
  CHECK(fixed.num_edges() == 50);
  CHECK(fixed.uniformity() == 100);
  CHECK(random_hypergraph_edges(5, 3, 10, 1) == complete(5, 3));
  CHECK_THROWS_AS(random_hypergraph_edges(5, 3, 11, 1), ParameterError);
}

TEST_CASE("F-free random hypergraphs") {
  const std::vector<Hypergraph> tent{canonical_tent()};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto h = f_free_random(12, 3, tent, std::nullopt, seed);
    CHECK_FALSE(contains_subhypergraph(h, canonical_tent()));
  }
  const auto dense = f_free_random(9, 3, tent, 0.4, 1);
  CHECK_FALSE(contains_subhypergraph(dense, canonical_tent()));
  CHECK(f_free_random(8, 3, {testing::single_edge()}, 0.5, 3).num_edges() == 0);
  CHECK(f_free_random(8, 3, tent, 0.0, 3).num_edges() == 0);
  CHECK_THROWS_AS(f_free_random(8, 3, {testing::single_edge()}, std::nullopt, 3), ParameterError);
  CHECK(f_free_default_probability(12, tent) == doctest::Approx(std::pow(12.0, -4.0 / 3.0)));
}

TEST_CASE("combinatorial lines") {
  const auto one = combinatorial_lines(1);
  CHECK(one.num_vertices() == 3);
  CHECK(one.num_edges() == 1);
  CHECK(combinatorial_lines(2).num_edges() == 7);
  CHECK(combinatorial_lines(3).num_edges() == 37);
  CHECK(combinatorial_lines(4).num_edges() == 175);
  // (1,1),(2,2),(3,3) is the diagonal line: ids 0, 4, 8.
  CHECK(combinatorial_lines(2).find_edge(Edge{0, 4, 8}) >= 0);
  // (1,1),(2,2),(3,1) is not a line.
  CHECK(combinatorial_lines(2).find_edge(Edge{0, 4, 6}) < 0);
  CHECK_THROWS_AS(combinatorial_lines(13), ResourceError);
}

TEST_CASE("greedy-hard set system") {
  CHECK(greedy_hard_extra_sets(2) == 1);
  CHECK(greedy_hard_extra_sets(20) == 57);
  const auto two = greedy_hard_setsystem(2);
  CHECK(two.universe_size() == 4);
  CHECK(two.num_sets() == 3);
  CHECK(two.set(0) == std::vector<Element>{1, 3});
  CHECK(two.set(1) == std::vector<Element>{0, 1});

  for (std::size_t k : {3u, 5u, 20u}) {
    const auto s = greedy_hard_setsystem(k);
    const auto m = greedy_hard_extra_sets(k);
    CHECK(s.num_sets() == m + k);
    CHECK(is_simple_system(s));
    CHECK(s.set(0).size() == k);
    std::vector<char> covered(k * k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (auto x : s.set(m + j)) covered[x] = 1;
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; }));
  }
}

TEST_CASE("cloud simplification") {
  const auto single = simplify_reduction(testing::single_edge(), 5, 3, 1);
  CHECK(single.num_vertices() == 15);
  CHECK(single.num_edges() <= 3);
  CHECK(is_simple(single));

  const auto thin = simplify_reduction(complete(5, 3), 1, 1, 0);
  CHECK(is_simple(thin));
  CHECK(thin.num_edges() < complete(5, 3).num_edges());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_hypergraph(7, 3, 0.4, seed);
    CHECK(is_simple(simplify_reduction(g, 3, 4, seed)));
  }
  CHECK(simplify_reduction(complete(5, 3), 3, 2, 8) == simplify_reduction(complete(5, 3), 3, 2, 8));
}

TEST_CASE("random simple set systems") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = random_simple_setsystem(18, 30, seed);
    CHECK(is_simple_system(s));
    CHECK_NOTHROW(greedy_set_cover(s));
  }
}
