#pragma once

#include <cstdint>
#include <vector>

#include "turancover/rational.hpp"
#include "turancover/set_system.hpp"

namespace turancover {

/// One entry per greedy pick.
struct GreedyTrace {
  std::vector<std::size_t> picked;
  std::vector<std::size_t> newly_covered;
  std::vector<std::size_t> uncovered_after;

  std::size_t size() const { return picked.size(); }
};

/// Every two distinct sets share at most one element.
bool is_simple_system(const SetSystem& s);

/// Repeatedly picks the set covering the most uncovered elements, lowest id
/// on ties. Throws ParameterError naming an element no set contains.
GreedyTrace greedy_set_cover(const SetSystem& s);

inline constexpr std::size_t kMaxBruteForceSets = 30;

/// Exact minimum number of sets covering the universe, by branching on the
/// sets through the smallest uncovered element. Families of more than
/// kMaxBruteForceSets sets raise ResourceError.
std::size_t brute_force_set_cover(const SetSystem& s);

/// |greedy| / opt for a simple system. Throws ParameterError when `s` is not
/// simple or opt is 0, and VerificationError when the ratio exceeds
/// ln(n)/2 + 1.
Rational greedy_ratio_check(const SetSystem& s, std::size_t opt);

/// ln(n)/2 + 1.
double simple_greedy_bound(std::size_t n);

}  // namespace turancover
