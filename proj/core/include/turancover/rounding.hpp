#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turancover/hypergraph.hpp"
#include "turancover/lp.hpp"
#include "turancover/rational.hpp"

namespace turancover {

/// Parameters of the thresholding + two-coloring rounding for uniformity t.
struct RoundingParams {
  std::size_t t = 3;
  double t_prime = 0;  // t/2 + 2 sqrt(t ln t)
  double gamma = 0;    // 1 / t_prime
  double delta = 0;    // sqrt(4 ln t / (t - 1))
  std::uint64_t seed = 0;
  std::size_t trials = 1;

  /// Throws ParameterError unless t >= 3 and trials >= 1.
  static RoundingParams make(std::size_t t, std::uint64_t seed, std::size_t trials);

  /// gamma rounded down to a multiple of 1e-6; the threshold actually applied.
  Rational gamma_rational() const { return floor_to_micro(gamma); }
  /// (1 - delta)(t - 1)/2; a label is high-discrepancy when some color count
  /// is at most this value.
  double discrepancy_threshold() const { return (1.0 - delta) * static_cast<double>(t - 1) / 2.0; }
};

/// Color of every base vertex in Z_P.
struct Coloring {
  std::vector<std::uint32_t> colors;
  std::uint32_t num_colors = 1;
  std::uint64_t seed = 0;

  static Coloring sample(std::size_t base_n, std::uint32_t num_colors, std::uint64_t seed);
};

struct CoverBreakdown {
  std::vector<VertexId> thresholded;   // U
  std::vector<VertexId> discrepancy;   // S'
  std::vector<VertexId> parity_class;  // f^-1(p)
};

struct TrialRecord {
  std::size_t cover_size = 0;
  std::size_t discrepancy_size = 0;
  std::size_t parity_size = 0;
};

enum class CoverSource {
  kRounding,   // U plus the trial's coloring classes
  kThreshold,  // single threshold at 1 / uniformity on the initial LP
};

struct CoverResult {
  VertexSet cover;
  CoverBreakdown breakdown;
  Rational lp_opt;
  Rational lp_opt_residual;
  /// |S|: LP support on the residual instance.
  std::size_t residual_support = 0;
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
  CoverSource source = CoverSource::kRounding;
  std::size_t rounding_size = 0;
  /// Size of the 1/uniformity threshold cover; 0 when not computed.
  std::size_t threshold_size = 0;
  std::vector<TrialRecord> trials;

  std::size_t size() const { return cover.size(); }
};

struct ThresholdResult {
  VertexSet thresholded;
  /// Same vertex ids as the input, only edges untouched by `thresholded`.
  Hypergraph residual;
  LPSolution initial;
  LPSolution residual_solution;
  Rational lp_opt;
  Rational lp_opt_residual;
  std::size_t rounds = 0;
};

/// Repeatedly solves the cover LP, moves every vertex with value >= gamma
/// into U and deletes the edges it covers, until no value reaches gamma.
/// Requires 0 < gamma < 1.
ThresholdResult recursive_threshold(const Hypergraph& h, const Rational& gamma,
                                    const LpOptions& lp = {});
inline ThresholdResult recursive_threshold(const BlowUp& b, const Rational& gamma,
                                           const LpOptions& lp = {}) {
  return recursive_threshold(b.hyper, gamma, lp);
}

struct ColorClasses {
  std::vector<VertexId> discrepancy;   // S'
  std::vector<VertexId> parity_class;  // f^-1(p), p the smaller class (ties -> 0)
  /// S' union f^-1(p), sorted.
  std::vector<VertexId> cover;
};

/// Two-coloring step on a support set S of blow-up vertices. A label is in
/// S' when one color appears at most `discrepancy_threshold` times in it;
/// f(v) is the parity of its color-1 count.
ColorClasses two_color_classes(const BlowUp& b, std::span<const VertexId> support,
                               const Coloring& coloring, double discrepancy_threshold);

/// Thresholding at gamma followed by best-of-`trials` two-colorings on the
/// residual support, for the (t-1)-blow-up of `g`. Also evaluates the plain
/// 1/t threshold cover of the initial LP and returns whichever is smaller
/// (ties keep the rounding cover). Every trial is a valid cover.
CoverResult ahtp_cover(const Hypergraph& g, const RoundingParams& params, const LpOptions& lp = {});

/// Color-coding cover of a (t-1)-blow-up with P = ceil((t-1)/(2 ln t))
/// colors: labels missing a color, plus the least popular residue class of
/// f(v) = sum_i i*C_i(v) mod P. Best of `trials` colorings.
CoverResult color_code_cover(const BlowUp& b, std::uint64_t seed, std::size_t trials = 1);

/// Number of colors used by color_code_cover for base uniformity t >= 3.
std::uint32_t color_code_palette(std::size_t t);

/// (t,2) rounding: thresholds at 4/t^2 on the 2-blow-up of `g`, then keeps
/// the residual-support pairs whose endpoints receive equal colors.
CoverResult t2_cover(const Hypergraph& g, std::uint64_t seed, std::size_t trials,
                     const LpOptions& lp = {});

/// All vertices with LP value >= 1/u, u the uniformity of `h`.
CoverResult fallback_threshold_cover(const Hypergraph& h, const LpOptions& lp = {});
inline CoverResult fallback_threshold_cover(const BlowUp& b, const LpOptions& lp = {}) {
  return fallback_threshold_cover(b.hyper, lp);
}

}  // namespace turancover
