#include "turancover/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "turancover/errors.hpp"
#include "turancover/lp.hpp"

namespace turancover {

namespace {

class NodeBudget {
 public:
  NodeBudget(std::uint64_t limit, const char* what) : limit_(limit), what_(what) {}
  void tick() {
    if (++used_ > limit_) {
      throw ResourceError(std::string(what_) + ": search exceeded " + std::to_string(limit_) +
                          " nodes");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char* what_;
};

class TauSearch {
 public:
  TauSearch(const Hypergraph& h, std::uint64_t node_limit)
      : h_(h), budget_(node_limit, "brute_tau"), hits_(h.num_edges(), 0),
        chosen_(h.num_vertices(), 0), forbidden_(h.num_vertices(), 0),
        mark_(h.num_vertices(), 0) {}

  TauResult run() {
    // Upper bound: every vertex of some edge; refined by the search itself.
    best_ = h_.num_vertices() + 1;
    root_bound_ = 0;
    try {
      LpOptions lp;
      root_bound_ = static_cast<std::size_t>(ceil_to_int(solve_vc_lp(h_, lp).objective));
    } catch (const ResourceError&) {
    }
    recurse();
    return TauResult{best_, VertexSet(best_cover_, h_.num_vertices())};
  }

 private:
  std::size_t disjoint_uncovered_bound() {
    ++stamp_;
    std::size_t count = 0;
    for (std::size_t e = 0; e < h_.num_edges(); ++e) {
      if (hits_[e]) continue;
      const Edge& edge = h_.edge(e);
      if (std::any_of(edge.begin(), edge.end(), [&](VertexId v) { return mark_[v] == stamp_; })) {
        continue;
      }
      for (VertexId v : edge) mark_[v] = stamp_;
      ++count;
    }
    return count;
  }

  void choose(VertexId v, int delta) {
    chosen_[v] = delta > 0;
    for (auto e : h_.incident(v)) hits_[e] += delta;
    if (delta > 0) {
      current_.push_back(v);
    } else {
      current_.pop_back();
    }
  }

  void recurse() {
    budget_.tick();
    if (best_ <= root_bound_) return;
    const std::size_t depth = current_.size();
    if (depth + disjoint_uncovered_bound() >= best_) return;
    std::size_t open = h_.num_edges();
    for (std::size_t e = 0; e < h_.num_edges(); ++e) {
      if (!hits_[e]) {
        open = e;
        break;
      }
    }
    if (open == h_.num_edges()) {
      best_ = depth;
      best_cover_ = current_;
      return;
    }
    std::vector<VertexId> banned_here;
    for (VertexId v : h_.edge(open)) {
      if (forbidden_[v]) continue;
      choose(v, +1);
      recurse();
      choose(v, -1);
      forbidden_[v] = 1;
      banned_here.push_back(v);
    }
    for (VertexId v : banned_here) forbidden_[v] = 0;
  }

  const Hypergraph& h_;
  NodeBudget budget_;
  std::vector<std::uint32_t> hits_;
  std::vector<char> chosen_;
  std::vector<char> forbidden_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_cover_;
  std::size_t best_ = 0;
  std::size_t root_bound_ = 0;
};

class NuSearch {
 public:
  NuSearch(const Hypergraph& h, std::uint64_t node_limit)
      : h_(h), budget_(node_limit, "brute_nu"), used_(h.num_vertices(), 0),
        dead_(h.num_vertices(), 0) {}

  NuResult run() {
    root_bound_ = h_.num_edges();
    try {
      LpOptions lp;
      root_bound_ = static_cast<std::size_t>(floor_to_int(solve_matching_lp(h_, lp).objective));
    } catch (const ResourceError&) {
    }
    recurse();
    return NuResult{best_.size(), best_};
  }

 private:
  bool free_edge(std::size_t e) const {
    const Edge& edge = h_.edge(e);
    return std::none_of(edge.begin(), edge.end(), [&](VertexId v) { return used_[v] || dead_[v]; });
  }

  void recurse() {
    budget_.tick();
    if (best_.size() >= root_bound_) return;
    // Vertices still lying in a free edge bound how many more edges fit.
    std::size_t live = 0;
    VertexId pivot = 0;
    bool found = false;
    for (VertexId v = 0; v < h_.num_vertices(); ++v) {
      if (used_[v] || dead_[v]) continue;
      const auto& inc = h_.incident(v);
      if (std::any_of(inc.begin(), inc.end(), [&](auto e) { return free_edge(e); })) {
        ++live;
        if (!found) {
          pivot = v;
          found = true;
        }
      }
    }
    if (current_.size() > best_.size()) best_ = current_;
    if (!found) return;
    if (current_.size() + live / h_.uniformity() <= best_.size()) return;

    for (auto e : h_.incident(pivot)) {
      if (!free_edge(e)) continue;
      for (VertexId v : h_.edge(e)) used_[v] = 1;
      current_.push_back(e);
      recurse();
      current_.pop_back();
      for (VertexId v : h_.edge(e)) used_[v] = 0;
      if (best_.size() >= root_bound_) return;
    }
    dead_[pivot] = 1;
    recurse();
    dead_[pivot] = 0;
  }

  const Hypergraph& h_;
  NodeBudget budget_;
  std::vector<char> used_;
  std::vector<char> dead_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t root_bound_ = 0;
};

class IndependentSearch {
 public:
  IndependentSearch(const Hypergraph& h, std::uint64_t node_limit)
      : h_(h), budget_(node_limit, "max_independent_set"), inside_(h.num_edges(), 0),
        in_set_(h.num_vertices(), 0) {}

  IndependentSetResult run() {
    recurse(0);
    return IndependentSetResult{best_.size(), best_};
  }

 private:
  void recurse(VertexId v) {
    budget_.tick();
    if (current_.size() > best_.size()) best_ = current_;
    if (v == h_.num_vertices()) return;
    if (current_.size() + (h_.num_vertices() - v) <= best_.size()) return;
    const auto& inc = h_.incident(v);
    const bool completes = std::any_of(inc.begin(), inc.end(), [&](auto e) {
      return inside_[e] + 1 == h_.uniformity();
    });
    if (!completes) {
      for (auto e : inc) ++inside_[e];
      current_.push_back(v);
      recurse(v + 1);
      current_.pop_back();
      for (auto e : inc) --inside_[e];
    }
    recurse(v + 1);
  }

  const Hypergraph& h_;
  NodeBudget budget_;
  std::vector<std::uint32_t> inside_;
  std::vector<char> in_set_;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

std::size_t intersection_size(const Edge& a, const Edge& b, VertexId* witness = nullptr) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (witness) *witness = *i;
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool common_vertex(const Edge& a, const Edge& b, const Edge& c) {
  for (VertexId v : a) {
    if (std::binary_search(b.begin(), b.end(), v) && std::binary_search(c.begin(), c.end(), v)) {
      return true;
    }
  }
  return false;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Hypergraph& h, const Hypergraph& f)
      : h_(h), f_(f), map_(f.num_vertices(), kUnmapped), image_used_(h.num_vertices(), 0),
        edge_used_(h.num_edges(), 0), edge_map_(f.num_edges(), 0) {}

  std::optional<Embedding> run() {
    if (f_.num_edges() > h_.num_edges() || f_.num_vertices() > h_.num_vertices()) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    // Isolated pattern vertices take the smallest unused host vertices.
    VertexId next = 0;
    for (auto& target : map_) {
      if (target != kUnmapped) continue;
      while (image_used_[next]) ++next;
      target = next;
      image_used_[next] = 1;
    }
    return Embedding{map_, edge_map_};
  }

 private:
  static constexpr VertexId kUnmapped = ~VertexId{0};

  bool assign(std::size_t fe) {
    if (fe == f_.num_edges()) return true;
    const Edge& pattern = f_.edge(fe);
    for (std::size_t he = 0; he < h_.num_edges(); ++he) {
      if (edge_used_[he]) continue;
      const Edge& host = h_.edge(he);
      // Already-mapped pattern vertices must land inside the host edge.
      std::vector<VertexId> unmapped_pattern;
      bool consistent = true;
      for (VertexId p : pattern) {
        if (map_[p] == kUnmapped) {
          unmapped_pattern.push_back(p);
        } else if (!std::binary_search(host.begin(), host.end(), map_[p])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      std::vector<VertexId> open_host;
      for (VertexId v : host) {
        if (!image_used_[v]) open_host.push_back(v);
      }
      if (open_host.size() != unmapped_pattern.size()) continue;
      edge_used_[he] = 1;
      edge_map_[fe] = he;
      do {
        for (std::size_t i = 0; i < unmapped_pattern.size(); ++i) {
          map_[unmapped_pattern[i]] = open_host[i];
          image_used_[open_host[i]] = 1;
        }
        if (assign(fe + 1)) return true;
        for (std::size_t i = 0; i < unmapped_pattern.size(); ++i) {
          map_[unmapped_pattern[i]] = kUnmapped;
          image_used_[open_host[i]] = 0;
        }
      } while (std::next_permutation(open_host.begin(), open_host.end()));
      edge_used_[he] = 0;
    }
    return false;
  }

  const Hypergraph& h_;
  const Hypergraph& f_;
  std::vector<VertexId> map_;
  std::vector<char> image_used_;
  std::vector<char> edge_used_;
  std::vector<std::size_t> edge_map_;
};

}  // namespace

TauResult brute_tau(const Hypergraph& h, std::uint64_t node_limit) {
  return TauSearch(h, node_limit).run();
}

NuResult brute_nu(const Hypergraph& h, std::uint64_t node_limit) {
  return NuSearch(h, node_limit).run();
}

IndependentSetResult max_independent_set(const Hypergraph& h, std::uint64_t node_limit) {
  return IndependentSearch(h, node_limit).run();
}

std::vector<Tent> find_tents(const Hypergraph& h, std::size_t max_edges) {
  if (h.num_edges() > max_edges) {
    throw ResourceError("find_tents: " + std::to_string(h.num_edges()) + " edges exceed the guard " +
                        std::to_string(max_edges));
  }
  std::vector<Tent> tents;
  struct Leg {
    std::size_t edge;
    VertexId meet;
  };
  for (std::size_t base = 0; base < h.num_edges(); ++base) {
    const Edge& b = h.edge(base);
    std::vector<Leg> legs;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      if (e == base) continue;
      VertexId meet = 0;
      if (intersection_size(b, h.edge(e), &meet) == 1) legs.push_back({e, meet});
    }
    for (std::size_t i = 0; i < legs.size(); ++i) {
      for (std::size_t j = i + 1; j < legs.size(); ++j) {
        if (legs[i].meet == legs[j].meet) continue;
        for (std::size_t k = j + 1; k < legs.size(); ++k) {
          if (legs[k].meet == legs[i].meet || legs[k].meet == legs[j].meet) continue;
          if (!common_vertex(h.edge(legs[i].edge), h.edge(legs[j].edge), h.edge(legs[k].edge))) {
            continue;
          }
          tents.push_back(Tent{{legs[i].edge, legs[j].edge, legs[k].edge}, base});
        }
      }
    }
  }
  std::sort(tents.begin(), tents.end());
  return tents;
}

std::optional<Embedding> contains_subhypergraph(const Hypergraph& h, const Hypergraph& f) {
  if (f.uniformity() != h.uniformity()) {
    throw ParameterError("pattern and host have different uniformity");
  }
  if (f.num_edges() > kMaxPatternEdges) {
    throw ResourceError("pattern has " + std::to_string(f.num_edges()) + " edges; at most " +
                        std::to_string(kMaxPatternEdges) + " supported");
  }
  return EmbeddingSearch(h, f).run();
}

Rational rho(const Hypergraph& f) {
  const std::size_t m = f.num_edges();
  if (m < 2) throw ParameterError("rho needs a non-trivial hypergraph (at least two edges)");
  if (m > kMaxRhoEdges) {
    throw ResourceError("rho enumerates edge subsets of at most " + std::to_string(kMaxRhoEdges) +
                        " edges");
  }
  const std::size_t words = (f.num_vertices() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t e = 0; e < m; ++e) {
    for (VertexId v : f.edge(e)) masks[e][v / 64] |= std::uint64_t{1} << (v % 64);
  }
  const long t = static_cast<long>(f.uniformity());
  Rational best(-1);
  std::vector<std::uint64_t> cover(words);
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    const int edges = std::popcount(subset);
    if (edges < 2) continue;
    std::fill(cover.begin(), cover.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      if (subset & (1u << e)) {
        for (std::size_t w = 0; w < words; ++w) cover[w] |= masks[e][w];
      }
    }
    long vertices = 0;
    for (auto w : cover) vertices += std::popcount(w);
    Rational density(edges - 1, vertices - t);
    if (density > best) best = density;
  }
  return best;
}

Hypergraph canonical_tent() {
  return Hypergraph(3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {2, 4, 6}});
}

}  // namespace turancover
