#pragma once

#include <vector>

#include "turancover/hypergraph.hpp"

namespace turancover::testing {

inline Hypergraph hg(std::size_t t, std::size_t n, std::vector<Edge> edges) {
  return Hypergraph(t, n, std::move(edges));
}

inline Hypergraph single_edge() { return hg(3, 3, {{0, 1, 2}}); }

inline Hypergraph two_disjoint_edges() { return hg(3, 6, {{0, 1, 2}, {3, 4, 5}}); }

}  // namespace turancover::testing
