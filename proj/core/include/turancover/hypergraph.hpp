#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turancover/set_system.hpp"

namespace turancover {

using VertexId = std::uint32_t;
using Edge = std::vector<VertexId>;

enum class DuplicatePolicy {
  kReject,  // duplicate edges raise ParameterError
  kMerge,   // duplicate edges collapse into one
};

/// A t-uniform hypergraph on vertices 0..n-1 in canonical form: every edge is
/// strictly increasing and the edge list is sorted lexicographically without
/// repeats. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t t, std::size_t n, std::vector<Edge> edges,
             DuplicatePolicy duplicates = DuplicatePolicy::kReject);

  std::size_t uniformity() const { return t_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  /// Ids of the edges containing `v`, increasing.
  const std::vector<std::uint32_t>& incident(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  /// Id of `edge` (sorted) in the canonical list, or -1.
  std::int64_t find_edge(std::span<const VertexId> edge) const;

  /// Same vertex set, keeping only the edges whose ids are listed.
  Hypergraph edge_subgraph(std::span<const std::size_t> edge_ids) const;

  bool operator==(const Hypergraph& other) const {
    return t_ == other.t_ && n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t t_ = 2;
  std::size_t n_ = 2;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

/// Sorted set of distinct vertex ids below some vertex count.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts `members`; throws ParameterError on duplicates or ids >= n.
  VertexSet(std::vector<VertexId> members, std::size_t n);

  const std::vector<VertexId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexId v) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

/// The k-blown-up hypergraph of a base t-uniform hypergraph. Vertex i of
/// `hyper` stands for the k-subset `labels[i]` of base vertices; each edge of
/// `hyper` is the set of all k-subsets of one base edge.
struct BlowUp {
  Hypergraph base;
  std::size_t k = 1;
  Hypergraph hyper;
  std::vector<Edge> labels;
  /// Base edge id for each edge of `hyper`.
  std::vector<std::size_t> base_edge_of;

  std::size_t base_t() const { return base.uniformity(); }
  std::size_t base_n() const { return base.num_vertices(); }
};

/// Requires 1 <= k < t. Labels are assigned in lexicographic order.
BlowUp blow_up(const Hypergraph& base, std::size_t k);

/// Rebuilds a BlowUp from a serialized hypergraph and its labels, recovering
/// the base hypergraph from label unions. Throws ParameterError when the pair
/// is not the k-blow-up of any base hypergraph on `base_n` vertices.
BlowUp blow_up_from_labels(const Hypergraph& hyper, std::vector<Edge> labels,
                           std::size_t base_t, std::size_t base_n);

/// Any two distinct edges share at most one vertex.
bool is_simple(const Hypergraph& h);
bool is_vertex_cover(const Hypergraph& h, const VertexSet& s);
/// Selected edges are pairwise disjoint. Throws ParameterError on a bad id.
bool is_matching(const Hypergraph& h, std::span<const std::size_t> edge_ids);

/// Incidence dual: universe = edge ids; one set per non-isolated vertex in
/// vertex order, listing the edges through it.
SetSystem dual(const Hypergraph& h);

}  // namespace turancover
