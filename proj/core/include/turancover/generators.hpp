#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turancover/hypergraph.hpp"
#include "turancover/set_system.hpp"

namespace turancover {

/// Refuse generators whose enumeration space exceeds this many candidates.
inline constexpr std::uint64_t kGeneratorGuard = 20'000'000;

/// All C(n, t) edges.
Hypergraph complete(std::size_t n, std::size_t t);

/// Each of the C(n, t) candidate edges independently with probability p,
/// candidates visited in lexicographic order.
Hypergraph random_hypergraph(std::size_t n, std::size_t t, double p, std::uint64_t seed);

/// Exactly m distinct uniformly random t-subsets (rejection on repeats).
/// Useful when C(n, t) is far too large to enumerate.
Hypergraph random_hypergraph_edges(std::size_t n, std::size_t t, std::size_t m, std::uint64_t seed);

/// Random hypergraph with every copy of every family member destroyed:
/// samples random_hypergraph(n, t, p), then repeatedly finds the first copy
/// of the first family member still present among surviving edges and
/// deletes that copy's edges. When `p` is absent it defaults to
/// n^(-1/rho) with rho the minimum of rho over the family.
Hypergraph f_free_random(std::size_t n, std::size_t t, const std::vector<Hypergraph>& family,
                         std::optional<double> p, std::uint64_t seed);

/// Default edge probability n^(-1/rho_min) for f_free_random.
double f_free_default_probability(std::size_t n, const std::vector<Hypergraph>& family);

/// 3-uniform hypergraph of combinatorial lines in [3]^n. Point x has id
/// sum_i x_i * 3^(n-1-i) with coordinates x_i in {0,1,2}.
Hypergraph combinatorial_lines(std::size_t n);

/// Number of sets in the greedy-hard family: ceil((k-1) ln k).
std::size_t greedy_hard_extra_sets(std::size_t k);

/// Simple set system on k^2 elements: the lower-bound sets T_1..T_m first,
/// then the k blocks {jk, ..., jk+k-1}.
SetSystem greedy_hard_setsystem(std::size_t k);

/// Cloud expansion: vertex v becomes v*B .. v*B+B-1; each base edge spawns P
/// edges picking one random copy per endpoint; any edge meeting an earlier
/// generated edge in two or more vertices is dropped. The result is simple.
Hypergraph simplify_reduction(const Hypergraph& g, std::size_t copies, std::size_t edges_per_base,
                              std::uint64_t seed);

/// Random simple set system covering [0, n): random sets accepted when they
/// meet every accepted set in at most one element, then singletons for any
/// uncovered element.
SetSystem random_simple_setsystem(std::size_t n, std::size_t attempts, std::uint64_t seed);

}  // namespace turancover
