#include "turancover/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "turancover/combinatorics.hpp"
#include "turancover/errors.hpp"
#include "turancover/oracles.hpp"
#include "turancover/random.hpp"

namespace turancover {

namespace {

void guard_space(std::uint64_t size, const char* what) {
  if (size > kGeneratorGuard) {
    throw ResourceError(std::string(what) + ": " + std::to_string(size) +
                        " candidates exceed the generator guard");
  }
}

std::vector<VertexId> iota_vertices(std::size_t n) {
  std::vector<VertexId> v(n);
  std::iota(v.begin(), v.end(), VertexId{0});
  return v;
}

}  // namespace

Hypergraph complete(std::size_t n, std::size_t t) {
  if (n < t) throw ParameterError("complete hypergraph needs n >= t");
  guard_space(binomial(n, t), "complete");
  std::vector<Edge> edges;
  const auto vertices = iota_vertices(n);
  for_each_subset(std::span<const VertexId>(vertices), t, [&](const Edge& e) { edges.push_back(e); });
  return Hypergraph(t, n, std::move(edges));
}

Hypergraph random_hypergraph(std::size_t n, std::size_t t, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
  if (n < t) throw ParameterError("random hypergraph needs n >= t");
  guard_space(binomial(n, t), "random");
  Rng rng(seed);
  std::vector<Edge> edges;
  const auto vertices = iota_vertices(n);
  for_each_subset(std::span<const VertexId>(vertices), t, [&](const Edge& e) {
    if (rng.bernoulli(p)) edges.push_back(e);
  });
  return Hypergraph(t, n, std::move(edges));
}

Hypergraph random_hypergraph_edges(std::size_t n, std::size_t t, std::size_t m, std::uint64_t seed) {
  if (n < t) throw ParameterError("random hypergraph needs n >= t");
  if (binomial(n, t) < m) throw ParameterError("more edges requested than C(n, t)");
  Rng rng(seed);
  std::set<Edge> chosen;
  std::vector<VertexId> pool = iota_vertices(n);
  while (chosen.size() < m) {
    // Partial Fisher-Yates picks t distinct vertices.
    for (std::size_t i = 0; i < t; ++i) {
      auto j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(pool[i], pool[j]);
    }
    Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(t));
    std::sort(e.begin(), e.end());
    chosen.insert(std::move(e));
  }
  return Hypergraph(t, n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

double f_free_default_probability(std::size_t n, const std::vector<Hypergraph>& family) {
  if (family.empty()) throw ParameterError("forbidden family is empty");
  Rational rho_min;
  bool first = true;
  for (const auto& f : family) {
    Rational r = rho(f);
    if (first || r < rho_min) rho_min = r;
    first = false;
  }
  return std::pow(static_cast<double>(n), -1.0 / to_double(rho_min));
}

Hypergraph f_free_random(std::size_t n, std::size_t t, const std::vector<Hypergraph>& family,
                         std::optional<double> p, std::uint64_t seed) {
  if (family.empty()) throw ParameterError("forbidden family is empty");
  for (const auto& f : family) {
    if (f.uniformity() != t) throw ParameterError("family member has the wrong uniformity");
    if (f.num_edges() == 0) throw ParameterError("family member has no edges");
    if (f.num_edges() > kMaxPatternEdges) throw ResourceError("family member too large to search for");
  }
  const double prob = p ? *p : f_free_default_probability(n, family);
  Hypergraph current = random_hypergraph(n, t, prob, seed);
  while (true) {
    std::optional<Embedding> hit;
    for (const auto& f : family) {
      hit = contains_subhypergraph(current, f);
      if (hit) break;
    }
    if (!hit) return current;
    std::vector<char> drop(current.num_edges(), 0);
    for (auto e : hit->edge_map) drop[e] = 1;
    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < current.num_edges(); ++e) {
      if (!drop[e]) keep.push_back(e);
    }
    current = current.edge_subgraph(keep);
  }
}

Hypergraph combinatorial_lines(std::size_t n) {
  if (n < 1) throw ParameterError("combinatorial lines need n >= 1");
  if (n > 12) throw ResourceError("combinatorial lines: 3^n exceeds the size guard");
  std::size_t points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= 3;
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < n; ++i) patterns *= 4;
  std::vector<Edge> edges;
  // Pattern digit 3 marks a wildcard coordinate.
  for (std::size_t code = 0; code < patterns; ++code) {
    std::size_t rest = code;
    std::vector<unsigned> digits(n);
    bool wildcard = false;
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = static_cast<unsigned>(rest % 4);
      rest /= 4;
      wildcard |= digits[i] == 3;
    }
    if (!wildcard) continue;
    Edge line;
    for (unsigned value = 0; value < 3; ++value) {
      VertexId id = 0;
      for (std::size_t i = 0; i < n; ++i) id = id * 3 + (digits[i] == 3 ? value : digits[i]);
      line.push_back(id);
    }
    edges.push_back(std::move(line));
  }
  return Hypergraph(3, points, std::move(edges));
}

std::size_t greedy_hard_extra_sets(std::size_t k) {
  if (k < 2) throw ParameterError("greedy hard instance needs k >= 2");
  const double kd = static_cast<double>(k);
  return static_cast<std::size_t>(std::ceil((kd - 1.0) * std::log(kd)));
}

SetSystem greedy_hard_setsystem(std::size_t k) {
  const std::size_t m = greedy_hard_extra_sets(k);
  // Uncovered elements of every block, kept increasing.
  std::vector<std::vector<Element>> uncovered(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t x = 0; x < k; ++x) uncovered[j].push_back(static_cast<Element>(j * k + x));
  }
  std::vector<std::vector<Element>> sets;
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < m; ++i) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return uncovered[a].size() > uncovered[b].size();
    });
    const std::size_t take = uncovered[order.front()].size();
    std::vector<Element> t_set;
    for (std::size_t l = 0; l < take; ++l) {
      auto& block = uncovered[order[l]];
      t_set.push_back(block.back());
      block.pop_back();
    }
    sets.push_back(std::move(t_set));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Element> block;
    for (std::size_t x = 0; x < k; ++x) block.push_back(static_cast<Element>(j * k + x));
    sets.push_back(std::move(block));
  }
  return SetSystem(k * k, std::move(sets));
}

Hypergraph simplify_reduction(const Hypergraph& g, std::size_t copies, std::size_t edges_per_base,
                              std::uint64_t seed) {
  if (copies < 1 || edges_per_base < 1) throw ParameterError("B and P must be at least 1");
  const std::size_t n = g.num_vertices() * copies;
  guard_space(static_cast<std::uint64_t>(g.num_edges()) * edges_per_base, "simplify");
  Rng rng(seed);
  std::vector<Edge> generated;
  generated.reserve(g.num_edges() * edges_per_base);
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < edges_per_base; ++i) {
      Edge copy;
      for (VertexId v : e) {
        copy.push_back(static_cast<VertexId>(v * copies + rng.below(copies)));
      }
      std::sort(copy.begin(), copy.end());
      generated.push_back(std::move(copy));
    }
  }
  // Drop every edge that shares a pair with any earlier generated edge,
  // whether or not that earlier edge survives.
  std::set<std::pair<VertexId, VertexId>> seen_pairs;
  std::vector<Edge> kept;
  for (const Edge& e : generated) {
    bool conflict = false;
    for (std::size_t a = 0; a < e.size() && !conflict; ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        if (seen_pairs.count({e[a], e[b]})) {
          conflict = true;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) seen_pairs.insert({e[a], e[b]});
    }
    if (!conflict) kept.push_back(e);
  }
  return Hypergraph(g.uniformity(), n, std::move(kept));
}

SetSystem random_simple_setsystem(std::size_t n, std::size_t attempts, std::uint64_t seed) {
  if (n < 1) throw ParameterError("universe must be nonempty");
  Rng rng(seed);
  std::vector<std::vector<Element>> sets;
  std::set<std::pair<Element, Element>> used_pairs;
  std::vector<Element> pool(n);
  std::iota(pool.begin(), pool.end(), Element{0});
  const std::size_t max_size = std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(n)) + 2);
  for (std::size_t a = 0; a < attempts; ++a) {
    const std::size_t size = 2 + static_cast<std::size_t>(rng.below(max_size - 1));
    if (size > n) continue;
    for (std::size_t i = 0; i < size; ++i) {
      auto j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<Element> s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    bool ok = true;
    for (std::size_t i = 0; i < size && ok; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (used_pairs.count({s[i], s[j]})) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) used_pairs.insert({s[i], s[j]});
    }
    sets.push_back(std::move(s));
  }
  std::vector<char> covered(n, 0);
  for (const auto& s : sets) {
    for (Element x : s) covered[x] = 1;
  }
  for (Element x = 0; x < n; ++x) {
    if (!covered[x]) sets.push_back({x});
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace turancover
