#include <doctest.h>

#include <limits>
#include <set>

#include "support.hpp"
#include "turancover/combinatorics.hpp"
#include "turancover/errors.hpp"
#include "turancover/generators.hpp"
#include "turancover/hypergraph.hpp"
#include "turancover/set_system.hpp"

using namespace turancover;
using testing::hg;

TEST_CASE("construction canonicalizes and validates") {
  const auto h = hg(3, 5, {{4, 2, 3}, {2, 1, 0}});
  CHECK(h.edge(0) == Edge{0, 1, 2});
  CHECK(h.edge(1) == Edge{2, 3, 4});
  CHECK(h.degree(2) == 2);
  CHECK(h.find_edge(Edge{2, 3, 4}) == 1);
  CHECK(h.find_edge(Edge{1, 3, 4}) == -1);

  CHECK_THROWS_AS(hg(3, 5, {{0, 1}}), ParameterError);
  CHECK_THROWS_AS(hg(3, 5, {{0, 1, 5}}), ParameterError);
  CHECK_THROWS_AS(hg(3, 5, {{0, 1, 1}}), ParameterError);
  CHECK_THROWS_AS(hg(3, 5, {{0, 1, 2}, {2, 1, 0}}), ParameterError);
  CHECK_THROWS_AS(hg(1, 5, {}), ParameterError);
  CHECK_THROWS_AS(hg(4, 3, {}), ParameterError);

  const Hypergraph merged(3, 5, {{0, 1, 2}, {2, 1, 0}}, DuplicatePolicy::kMerge);
  CHECK(merged.num_edges() == 1);
}

TEST_CASE("blow-up shapes") {
  const auto one = blow_up(testing::single_edge(), 2);
  CHECK(one.hyper.num_vertices() == 3);
  CHECK(one.hyper.num_edges() == 1);
  CHECK(one.labels == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  const auto k4 = blow_up(complete(4, 3), 2);
  CHECK(k4.hyper.num_vertices() == 6);
  CHECK(k4.hyper.num_edges() == 4);
  CHECK(k4.hyper.uniformity() == 3);

  const auto k5 = blow_up(complete(5, 4), 3);
  CHECK(k5.hyper.num_vertices() == 10);
  CHECK(k5.hyper.num_edges() == 5);
  CHECK(k5.hyper.uniformity() == 4);

  CHECK_THROWS_AS(blow_up(complete(4, 3), 0), ParameterError);
  CHECK_THROWS_AS(blow_up(complete(4, 3), 3), ParameterError);
  CHECK_THROWS_AS(blow_up(hg(3, 4, {}), 2), ParameterError);
}

TEST_CASE("blow-up invariants on random bases") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t t = 3 + seed % 3;
    const std::size_t n = 6 + seed % 7;
    const auto g = random_hypergraph(n, t, 0.3, seed);
    if (g.num_edges() == 0) continue;
    const auto b = blow_up(g, t - 1);
    CHECK(b.hyper.num_vertices() <= binomial(n, t - 1));
    CHECK(b.hyper.num_edges() == g.num_edges());
    CHECK(is_simple(b.hyper));
    for (std::size_t e = 0; e < b.hyper.num_edges(); ++e) {
      std::set<VertexId> merged;
      for (VertexId v : b.hyper.edge(e)) merged.insert(b.labels[v].begin(), b.labels[v].end());
      CHECK(Edge(merged.begin(), merged.end()) == g.edge(b.base_edge_of[e]));
    }
  }
}

TEST_CASE("blow-up from explicit labels") {
  const auto b = blow_up(complete(4, 3), 2);
  const auto again = blow_up_from_labels(b.hyper, b.labels, 3, 4);
  CHECK(again.base == b.base);
  CHECK(again.base_edge_of == b.base_edge_of);
  auto bad = b.labels;
  std::swap(bad[0], bad[5]);
  CHECK_THROWS_AS(blow_up_from_labels(b.hyper, bad, 3, 4), ParameterError);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(testing::single_edge()));
  CHECK_FALSE(is_simple(hg(3, 4, {{0, 1, 2}, {0, 1, 3}})));
  CHECK(is_simple(hg(3, 5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST_CASE("vertex covers") {
  const auto e = testing::single_edge();
  CHECK(is_vertex_cover(e, VertexSet({1}, 3)));
  CHECK_FALSE(is_vertex_cover(e, VertexSet({}, 3)));
  CHECK(is_vertex_cover(hg(3, 4, {}), VertexSet({}, 4)));

  const auto b = blow_up(complete(4, 3), 2);
  // {0,1} and {2,3}: every triangle of K4 contains one of the two pairs.
  CHECK(is_vertex_cover(b.hyper, VertexSet({0, 5}, 6)));
  CHECK_FALSE(is_vertex_cover(b.hyper, VertexSet({0, 1}, 6)));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = random_hypergraph(8, 3, 0.4, seed);
    std::vector<VertexId> all(h.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    CHECK(is_vertex_cover(h, VertexSet(all, h.num_vertices())));
    CHECK(is_vertex_cover(h, VertexSet({}, h.num_vertices())) == (h.num_edges() == 0));
  }
  CHECK_THROWS_AS(VertexSet({3}, 3), ParameterError);
}

TEST_CASE("matchings") {
  const auto h = hg(3, 6, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}});
  CHECK(is_matching(h, std::vector<std::size_t>{}));
  CHECK(is_matching(h, std::vector<std::size_t>{1}));
  CHECK(is_matching(h, std::vector<std::size_t>{0, 2}));
  CHECK_FALSE(is_matching(h, std::vector<std::size_t>{0, 1}));
  CHECK_THROWS_AS(is_matching(h, std::vector<std::size_t>{3}), ParameterError);
}

TEST_CASE("dual set systems") {
  const auto d = dual(testing::single_edge());
  CHECK(d.universe_size() == 1);
  CHECK(d.num_sets() == 3);
  for (const auto& s : d.sets()) CHECK(s.size() == 1);

  const auto k4 = dual(blow_up(complete(4, 3), 2).hyper);
  CHECK(k4.universe_size() == 4);
  CHECK(k4.num_sets() == 6);
  for (const auto& s : k4.sets()) CHECK(s.size() == 2);

  CHECK(dual(hg(3, 5, {{0, 1, 2}})).num_sets() == 3);
}

TEST_CASE("double dual restores the system up to relabeling") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_hypergraph(7, 3, 0.3, seed);
    if (g.num_edges() == 0) continue;
    const auto once = dual(g);
    const auto twice = dual(once);
    // Isolated vertices of g have no set in `once`.
    std::size_t used = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) used += g.degree(v) > 0;
    CHECK(once.num_sets() == used);
    CHECK(twice.universe_size() == used);
    CHECK(twice.num_sets() == g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) CHECK(twice.set(e).size() == g.uniformity());
  }
}

TEST_CASE("subset enumeration is lexicographic") {
  std::vector<int> items{1, 2, 3, 4};
  std::vector<std::vector<int>> seen;
  for_each_subset(std::span<const int>(items), 2, [&](const std::vector<int>& s) { seen.push_back(s); });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{1, 2});
  CHECK(seen.back() == std::vector<int>{3, 4});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(binomial(300, 100) == std::numeric_limits<std::uint64_t>::max());
  CHECK(binomial(10, 3) == 120);
}
