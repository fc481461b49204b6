#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turancover/hypergraph.hpp"
#include "turancover/rational.hpp"

namespace turancover {

enum class LpMode { kExact, kFloat };
enum class LpKind {
  kPrimal,  // fractional vertex cover, one value per vertex
  kDual,    // fractional matching, one value per edge
};

struct LpOptions {
  LpMode mode = LpMode::kExact;
  /// Exact mode refuses instances with n * m above this product.
  std::uint64_t size_guard = 50'000;
  /// Float mode: feasibility/optimality tolerance; smaller magnitudes snap to 0.
  double tolerance = 1e-9;
};

/// Optimal basic solution of the covering LP or of its packing dual. Float
/// mode values are the exact binary values of the computed doubles.
struct LPSolution {
  LpKind kind = LpKind::kPrimal;
  LpMode mode = LpMode::kExact;
  std::vector<Rational> values;
  Rational objective;

  /// Ids with a nonzero value, increasing.
  std::vector<std::size_t> support() const;
};

struct LpPair {
  LPSolution primal;
  LPSolution dual;
};

/// Solves min sum x_v s.t. sum_{v in e} x_v >= 1, x >= 0 together with its
/// dual by simplex under Bland's rule. Exact mode uses GMP rationals; the
/// returned pair is complementary and has equal objectives.
///
/// The tableau has one row per edge when m does not exceed the number of
/// non-isolated vertices (dual simplex on the covering form) and one row per
/// non-isolated vertex otherwise (primal simplex on the packing form).
/// Throws ResourceError when the exact-mode size guard is exceeded.
LpPair solve_lp_pair(const Hypergraph& h, const LpOptions& options = {});

LPSolution solve_vc_lp(const Hypergraph& h, const LpOptions& options = {});
LPSolution solve_matching_lp(const Hypergraph& h, const LpOptions& options = {});

struct SlacknessReport {
  bool passed = false;
  /// Empty when passed; otherwise names the offending vertex or edge.
  std::string violation;
  std::size_t support_size = 0;
  /// uniformity * objective
  Rational support_bound;
};

/// Checks that both solutions are feasible with equal objectives and satisfy
/// complementary slackness. Also reports |support(primal)| against t * objective.
/// Both solutions must be exact; throws ParameterError otherwise.
SlacknessReport check_complementary_slackness(const LPSolution& primal, const LPSolution& dual,
                                              const Hypergraph& h);

}  // namespace turancover
