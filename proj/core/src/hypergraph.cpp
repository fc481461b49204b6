#include "turancover/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "turancover/combinatorics.hpp"
#include "turancover/errors.hpp"

namespace turancover {

namespace {

std::string edge_text(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "}";
}

}  // namespace

Hypergraph::Hypergraph(std::size_t t, std::size_t n, std::vector<Edge> edges,
                       DuplicatePolicy duplicates)
    : t_(t), n_(n), edges_(std::move(edges)) {
  if (t_ < 2) throw ParameterError("uniformity must be at least 2");
  if (n_ < t_) throw ParameterError("vertex count must be at least the uniformity");
  for (auto& e : edges_) {
    if (e.size() != t_) {
      throw ParameterError("edge " + edge_text(e) + " has " + std::to_string(e.size()) +
                           " vertices, expected " + std::to_string(t_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParameterError("edge " + edge_text(e) + " repeats a vertex");
    }
    if (e.back() >= n_) throw ParameterError("edge " + edge_text(e) + " has a vertex >= n");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    if (duplicates == DuplicatePolicy::kReject) {
      throw ParameterError("duplicate edge " + edge_text(*dup));
    }
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }
  incidence_.assign(n_, {});
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    for (VertexId v : edges_[id]) incidence_[v].push_back(static_cast<std::uint32_t>(id));
  }
}

std::int64_t Hypergraph::find_edge(std::span<const VertexId> edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge,
                             [](const Edge& a, std::span<const VertexId> b) {
                               return std::lexicographical_compare(a.begin(), a.end(),
                                                                   b.begin(), b.end());
                             });
  if (it == edges_.end() || !std::equal(it->begin(), it->end(), edge.begin(), edge.end())) {
    return -1;
  }
  return it - edges_.begin();
}

Hypergraph Hypergraph::edge_subgraph(std::span<const std::size_t> edge_ids) const {
  std::vector<Edge> kept;
  kept.reserve(edge_ids.size());
  for (std::size_t id : edge_ids) kept.push_back(edges_.at(id));
  return Hypergraph(t_, n_, std::move(kept));
}

VertexSet::VertexSet(std::vector<VertexId> members, std::size_t n) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ParameterError("vertex set repeats a vertex");
  }
  if (!members_.empty() && members_.back() >= n) {
    throw ParameterError("vertex " + std::to_string(members_.back()) + " out of range");
  }
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

/// Attaches canonical blow-up edge ids to base edges via label unions.
std::vector<std::size_t> link_base_edges(const Hypergraph& hyper, const std::vector<Edge>& labels,
                                         const Hypergraph& base) {
  std::vector<std::size_t> base_edge_of(hyper.num_edges());
  for (std::size_t id = 0; id < hyper.num_edges(); ++id) {
    Edge merged;
    for (VertexId v : hyper.edge(id)) merged.insert(merged.end(), labels[v].begin(), labels[v].end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    auto found = base.find_edge(merged);
    if (found < 0) throw ParameterError("blow-up edge " + std::to_string(id) + " has no base edge");
    base_edge_of[id] = static_cast<std::size_t>(found);
  }
  return base_edge_of;
}

}  // namespace

BlowUp blow_up(const Hypergraph& base, std::size_t k) {
  const std::size_t t = base.uniformity();
  if (k < 1 || k >= t) {
    throw ParameterError("blow-up order k=" + std::to_string(k) + " must satisfy 1 <= k < t=" +
                         std::to_string(t));
  }
  if (base.num_edges() == 0) throw ParameterError("cannot blow up a hypergraph with no edges");
  std::vector<Edge> labels;
  for (const Edge& e : base.edges()) {
    for_each_subset(std::span<const VertexId>(e), k, [&](const Edge& s) { labels.push_back(s); });
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&](const Edge& label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    return static_cast<VertexId>(it - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(base.num_edges());
  for (const Edge& e : base.edges()) {
    Edge blown;
    for_each_subset(std::span<const VertexId>(e), k, [&](const Edge& s) { blown.push_back(id_of(s)); });
    edges.push_back(std::move(blown));
  }
  const std::size_t u = static_cast<std::size_t>(binomial(t, k));
  const std::size_t n = labels.size();
  BlowUp out{base, k, Hypergraph(u, n, std::move(edges), DuplicatePolicy::kMerge), labels, {}};
  out.base_edge_of = link_base_edges(out.hyper, out.labels, out.base);
  return out;
}

BlowUp blow_up_from_labels(const Hypergraph& hyper, std::vector<Edge> labels, std::size_t base_t,
                           std::size_t base_n) {
  if (labels.size() != hyper.num_vertices()) {
    throw ParameterError("expected " + std::to_string(hyper.num_vertices()) + " labels, got " +
                         std::to_string(labels.size()));
  }
  if (labels.empty()) throw ParameterError("blow-up has no labels");
  const std::size_t k = labels.front().size();
  if (k < 1 || k >= base_t) throw ParameterError("label size incompatible with base uniformity");
  if (binomial(base_t, k) != hyper.uniformity()) {
    throw ParameterError("blow-up uniformity is not C(base_t, k)");
  }
  for (const Edge& l : labels) {
    if (l.size() != k) throw ParameterError("labels differ in size");
    if (!std::is_sorted(l.begin(), l.end()) ||
        std::adjacent_find(l.begin(), l.end()) != l.end() || l.back() >= base_n) {
      throw ParameterError("label " + edge_text(l) + " is not an increasing subset of [0, base_n)");
    }
  }
  std::map<Edge, VertexId> id_of;
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!id_of.emplace(labels[v], v).second) throw ParameterError("labels are not distinct");
  }
  std::vector<Edge> base_edges;
  for (const Edge& e : hyper.edges()) {
    Edge merged;
    for (VertexId v : e) merged.insert(merged.end(), labels[v].begin(), labels[v].end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    if (merged.size() != base_t) throw ParameterError("blow-up edge labels do not span a base edge");
    Edge expected;
    for_each_subset(std::span<const VertexId>(merged), k, [&](const Edge& s) {
      auto it = id_of.find(s);
      if (it != id_of.end()) expected.push_back(it->second);
    });
    std::sort(expected.begin(), expected.end());
    if (expected != e) throw ParameterError("blow-up edge is not the full k-shadow of its base edge");
    base_edges.push_back(std::move(merged));
  }
  for (VertexId v = 0; v < hyper.num_vertices(); ++v) {
    if (hyper.degree(v) == 0) {
      throw ParameterError("label " + edge_text(labels[v]) + " lies in no base edge");
    }
  }
  BlowUp out{Hypergraph(base_t, base_n, std::move(base_edges)), k, hyper, std::move(labels), {}};
  out.base_edge_of = link_base_edges(out.hyper, out.labels, out.base);
  return out;
}

bool is_simple(const Hypergraph& h) {
  std::unordered_set<std::uint64_t> pairs;
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        auto key = (static_cast<std::uint64_t>(e[i]) << 32) | e[j];
        if (!pairs.insert(key).second) return false;
      }
    }
  }
  return true;
}

bool is_vertex_cover(const Hypergraph& h, const VertexSet& s) {
  std::vector<char> chosen(h.num_vertices(), 0);
  for (VertexId v : s.members()) {
    if (v >= h.num_vertices()) throw ParameterError("cover vertex out of range");
    chosen[v] = 1;
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::any_of(e.begin(), e.end(), [&](VertexId v) { return chosen[v] != 0; });
  });
}

bool is_matching(const Hypergraph& h, std::span<const std::size_t> edge_ids) {
  std::vector<char> used(h.num_vertices(), 0);
  for (std::size_t id : edge_ids) {
    if (id >= h.num_edges()) throw ParameterError("edge id " + std::to_string(id) + " out of range");
  }
  for (std::size_t id : edge_ids) {
    for (VertexId v : h.edge(id)) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

SetSystem dual(const Hypergraph& h) {
  std::vector<std::vector<Element>> sets;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 0) continue;
    sets.emplace_back(h.incident(v).begin(), h.incident(v).end());
  }
  return SetSystem(h.num_edges(), std::move(sets));
}

}  // namespace turancover
