#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "turancover/hypergraph.hpp"
#include "turancover/rational.hpp"

namespace turancover {

/// Default branch-and-bound budget (search nodes) for the exact oracles.
inline constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

struct TauResult {
  std::size_t tau = 0;
  VertexSet cover;  // a minimum cover
};

/// Exact minimum vertex cover by branch-and-bound over the first uncovered
/// edge. Lower bounds: a greedy disjoint family of uncovered edges per node,
/// and ceil(tau*) at the root when the exact LP fits its size guard.
/// Throws ResourceError after `node_limit` search nodes.
TauResult brute_tau(const Hypergraph& h, std::uint64_t node_limit = kDefaultNodeLimit);

struct NuResult {
  std::size_t nu = 0;
  std::vector<std::size_t> matching;  // edge ids of a maximum matching
};

/// Exact maximum matching; branches on the smallest vertex still in a free
/// edge (leave it unmatched, or match it through each free edge).
NuResult brute_nu(const Hypergraph& h, std::uint64_t node_limit = kDefaultNodeLimit);

struct IndependentSetResult {
  std::size_t alpha = 0;
  std::vector<VertexId> members;
};

/// Exact maximum independent set (no edge entirely inside), by include/
/// exclude branching over vertices in id order.
IndependentSetResult max_independent_set(const Hypergraph& h,
                                         std::uint64_t node_limit = kDefaultNodeLimit);

/// Edge ids forming a tent: `legs` share a common vertex (legs sorted
/// increasingly); `base` meets each leg in exactly one vertex, the three
/// meeting vertices pairwise distinct.
struct Tent {
  std::array<std::size_t, 3> legs{};
  std::size_t base = 0;
  bool operator==(const Tent&) const = default;
  auto operator<=>(const Tent&) const = default;
};

/// Every tent of `h`, each (leg triple, base) reported once, sorted.
/// Throws ResourceError when h has more than `max_edges` edges.
std::vector<Tent> find_tents(const Hypergraph& h, std::size_t max_edges = 5'000);

/// Injective vertex map F -> H carrying every F-edge onto an H-edge.
struct Embedding {
  std::vector<VertexId> vertex_map;     // indexed by F vertex
  std::vector<std::size_t> edge_map;    // indexed by F edge
};

inline constexpr std::size_t kMaxPatternEdges = 6;

/// First embedding of F into H (not necessarily induced) found by
/// backtracking over F's edges in order and H's edges in id order.
/// F must have the same uniformity and at most kMaxPatternEdges edges.
std::optional<Embedding> contains_subhypergraph(const Hypergraph& h, const Hypergraph& f);

inline constexpr std::size_t kMaxRhoEdges = 20;

/// max over sub-families F' of at least two edges of (e'-1)/(v'-t), where
/// v' counts the vertices covered by F'. Requires 2 <= |E(F)| <= 20.
Rational rho(const Hypergraph& f);

/// The canonical 3-tent on 7 vertices: apex 0, legs {0,1,2} {0,3,4} {0,5,6},
/// base {2,4,6}.
Hypergraph canonical_tent();

}  // namespace turancover
