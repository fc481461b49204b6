#include "turancover/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "turancover/errors.hpp"
#include "turancover/random.hpp"

namespace turancover {

RoundingParams RoundingParams::make(std::size_t t, std::uint64_t seed, std::size_t trials) {
  if (t < 3) throw ParameterError("rounding requires uniformity t >= 3, got " + std::to_string(t));
  if (trials < 1) throw ParameterError("trials must be at least 1");
  RoundingParams p;
  p.t = t;
  const double td = static_cast<double>(t);
  p.t_prime = td / 2.0 + 2.0 * std::sqrt(td * std::log(td));
  p.gamma = 1.0 / p.t_prime;
  p.delta = std::sqrt(4.0 * std::log(td) / (td - 1.0));
  p.seed = seed;
  p.trials = trials;
  return p;
}

Coloring Coloring::sample(std::size_t base_n, std::uint32_t num_colors, std::uint64_t seed) {
  if (num_colors < 1) throw ParameterError("a coloring needs at least one color");
  Coloring c;
  c.num_colors = num_colors;
  c.seed = seed;
  c.colors.resize(base_n);
  Rng rng(seed);
  for (auto& color : c.colors) color = static_cast<std::uint32_t>(rng.below(num_colors));
  return c;
}

namespace {

std::vector<VertexId> sorted_union(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// Float-mode values are compared with `tolerance` slack so that values that
/// are exact fractions in exact arithmetic are not lost to rounding.
std::vector<VertexId> at_least(const LPSolution& x, Rational threshold, double tolerance) {
  if (x.mode == LpMode::kFloat) threshold -= from_double(tolerance);
  std::vector<VertexId> ids;
  for (std::size_t v = 0; v < x.values.size(); ++v) {
    if (x.values[v] >= threshold) ids.push_back(static_cast<VertexId>(v));
  }
  return ids;
}

std::vector<VertexId> support_of(const LPSolution& x) {
  std::vector<VertexId> ids;
  for (std::size_t v : x.support()) ids.push_back(static_cast<VertexId>(v));
  return ids;
}

void require_blow_up_order(const BlowUp& b, std::size_t k, const char* what) {
  if (b.k != k) {
    throw ParameterError(std::string(what) + " needs the " + std::to_string(k) +
                         "-blow-up, got k=" + std::to_string(b.k));
  }
}

}  // namespace

ThresholdResult recursive_threshold(const Hypergraph& h, const Rational& gamma, const LpOptions& lp) {
  if (gamma <= 0 || gamma >= 1) throw ParameterError("threshold gamma must lie in (0, 1)");
  ThresholdResult out;
  out.initial = solve_vc_lp(h, lp);
  out.lp_opt = out.initial.objective;

  std::vector<char> taken(h.num_vertices(), 0);
  std::vector<VertexId> u;
  Hypergraph current = h;
  LPSolution x = out.initial;
  while (true) {
    auto high = at_least(x, gamma, lp.tolerance);
    if (high.empty()) break;
    ++out.rounds;
    for (VertexId v : high) {
      taken[v] = 1;
      u.push_back(v);
    }
    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < current.num_edges(); ++e) {
      const Edge& edge = current.edge(e);
      if (std::none_of(edge.begin(), edge.end(), [&](VertexId v) { return taken[v] != 0; })) {
        keep.push_back(e);
      }
    }
    current = current.edge_subgraph(keep);
    x = solve_vc_lp(current, lp);
  }
  out.thresholded = VertexSet(std::move(u), h.num_vertices());
  out.residual = std::move(current);
  out.residual_solution = std::move(x);
  out.lp_opt_residual = out.residual_solution.objective;
  return out;
}

ColorClasses two_color_classes(const BlowUp& b, std::span<const VertexId> support,
                               const Coloring& coloring, double discrepancy_threshold) {
  if (coloring.num_colors != 2) throw ParameterError("two_color_classes needs a 2-coloring");
  if (coloring.colors.size() != b.base_n()) throw ParameterError("coloring does not match base");
  ColorClasses out;
  std::vector<VertexId> parity[2];
  for (VertexId v : support) {
    const Edge& label = b.labels.at(v);
    std::size_t ones = 0;
    for (VertexId base_vertex : label) ones += coloring.colors[base_vertex];
    const std::size_t zeros = label.size() - ones;
    if (static_cast<double>(ones) <= discrepancy_threshold ||
        static_cast<double>(zeros) <= discrepancy_threshold) {
      out.discrepancy.push_back(v);
    }
    parity[ones % 2].push_back(v);
  }
  const int p = parity[0].size() <= parity[1].size() ? 0 : 1;
  out.parity_class = std::move(parity[p]);
  std::sort(out.discrepancy.begin(), out.discrepancy.end());
  std::sort(out.parity_class.begin(), out.parity_class.end());
  out.cover = sorted_union(out.discrepancy, out.parity_class);
  return out;
}

CoverResult ahtp_cover(const Hypergraph& g, const RoundingParams& params, const LpOptions& lp) {
  const std::size_t t = g.uniformity();
  if (t < 3) throw ParameterError("AHTP rounding requires t >= 3");
  if (params.t != t) throw ParameterError("rounding parameters were built for a different t");
  if (params.trials < 1) throw ParameterError("trials must be at least 1");
  const BlowUp b = blow_up(g, t - 1);
  const std::size_t n = b.hyper.num_vertices();

  ThresholdResult thr = recursive_threshold(b.hyper, params.gamma_rational(), lp);
  const auto support = support_of(thr.residual_solution);
  const double threshold = params.discrepancy_threshold();

  CoverResult best;
  bool have_best = false;
  best.trials.reserve(params.trials);
  for (std::size_t i = 0; i < params.trials; ++i) {
    const auto coloring = Coloring::sample(g.num_vertices(), 2, child_seed(params.seed, i));
    auto classes = two_color_classes(b, support, coloring, threshold);
    auto cover = sorted_union(thr.thresholded.members(), classes.cover);
    best.trials.push_back({cover.size(), classes.discrepancy.size(), classes.parity_class.size()});
    if (!have_best || cover.size() < best.cover.size()) {
      have_best = true;
      best.cover = VertexSet(std::move(cover), n);
      best.breakdown = {thr.thresholded.members(), std::move(classes.discrepancy),
                        std::move(classes.parity_class)};
      best.trial_index = i;
    }
  }
  best.lp_opt = thr.lp_opt;
  best.lp_opt_residual = thr.lp_opt_residual;
  best.residual_support = support.size();
  best.seed = params.seed;
  best.rounding_size = best.cover.size();

  const Rational one_over_u(1, static_cast<long>(b.hyper.uniformity()));
  auto fallback = at_least(thr.initial, one_over_u, lp.tolerance);
  best.threshold_size = fallback.size();
  if (fallback.size() < best.cover.size()) {
    best.cover = VertexSet(std::move(fallback), n);
    best.source = CoverSource::kThreshold;
  }
  return best;
}

std::uint32_t color_code_palette(std::size_t t) {
  if (t < 3) throw ParameterError("color coding requires t >= 3");
  const double td = static_cast<double>(t);
  return static_cast<std::uint32_t>(std::ceil((td - 1.0) / (2.0 * std::log(td))));
}

CoverResult color_code_cover(const BlowUp& b, std::uint64_t seed, std::size_t trials) {
  const std::size_t t = b.base_t();
  if (t < 3) throw ParameterError("color coding requires t >= 3");
  require_blow_up_order(b, t - 1, "color coding");
  if (trials < 1) throw ParameterError("trials must be at least 1");
  const std::uint32_t palette = color_code_palette(t);
  const std::size_t n = b.hyper.num_vertices();

  CoverResult best;
  bool have_best = false;
  std::vector<std::uint32_t> counts(palette);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto coloring = Coloring::sample(b.base_n(), palette, child_seed(seed, i));
    std::vector<VertexId> missing;
    std::vector<std::uint32_t> residue(n);
    std::vector<std::size_t> popularity(palette, 0);
    for (VertexId v = 0; v < n; ++v) {
      std::fill(counts.begin(), counts.end(), 0);
      for (VertexId base_vertex : b.labels[v]) ++counts[coloring.colors[base_vertex]];
      if (std::find(counts.begin(), counts.end(), 0u) != counts.end()) missing.push_back(v);
      std::uint64_t f = 0;
      for (std::uint32_t c = 1; c < palette; ++c) f += static_cast<std::uint64_t>(c) * counts[c];
      residue[v] = static_cast<std::uint32_t>(f % palette);
      ++popularity[residue[v]];
    }
    const auto p = static_cast<std::uint32_t>(
        std::min_element(popularity.begin(), popularity.end()) - popularity.begin());
    std::vector<VertexId> parity;
    for (VertexId v = 0; v < n; ++v) {
      if (residue[v] == p) parity.push_back(v);
    }
    auto cover = sorted_union(missing, parity);
    best.trials.push_back({cover.size(), 0, parity.size()});
    if (!have_best || cover.size() < best.cover.size()) {
      have_best = true;
      best.cover = VertexSet(std::move(cover), n);
      best.breakdown = {std::move(missing), {}, std::move(parity)};
      best.trial_index = i;
    }
  }
  best.seed = seed;
  best.rounding_size = best.cover.size();
  return best;
}

CoverResult t2_cover(const Hypergraph& g, std::uint64_t seed, std::size_t trials, const LpOptions& lp) {
  const std::size_t t = g.uniformity();
  if (t < 3) throw ParameterError("(t,2) rounding requires t >= 3");
  if (trials < 1) throw ParameterError("trials must be at least 1");
  const BlowUp b = blow_up(g, 2);
  const std::size_t n = b.hyper.num_vertices();
  const Rational gamma(4, static_cast<long>(t * t));

  ThresholdResult thr = recursive_threshold(b.hyper, gamma, lp);
  const auto support = support_of(thr.residual_solution);

  CoverResult best;
  bool have_best = false;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto coloring = Coloring::sample(g.num_vertices(), 2, child_seed(seed, i));
    std::vector<VertexId> mono;
    for (VertexId v : support) {
      const Edge& pair = b.labels[v];
      if (coloring.colors[pair[0]] == coloring.colors[pair[1]]) mono.push_back(v);
    }
    auto cover = sorted_union(thr.thresholded.members(), mono);
    best.trials.push_back({cover.size(), 0, mono.size()});
    if (!have_best || cover.size() < best.cover.size()) {
      have_best = true;
      best.cover = VertexSet(std::move(cover), n);
      best.breakdown = {thr.thresholded.members(), {}, std::move(mono)};
      best.trial_index = i;
    }
  }
  best.lp_opt = thr.lp_opt;
  best.lp_opt_residual = thr.lp_opt_residual;
  best.residual_support = support.size();
  best.seed = seed;
  best.rounding_size = best.cover.size();
  return best;
}

CoverResult fallback_threshold_cover(const Hypergraph& h, const LpOptions& lp) {
  const LPSolution x = solve_vc_lp(h, lp);
  auto chosen = at_least(x, Rational(1, static_cast<long>(h.uniformity())), lp.tolerance);
  CoverResult out;
  out.lp_opt = x.objective;
  out.lp_opt_residual = Rational(0);
  out.cover = VertexSet(chosen, h.num_vertices());
  out.breakdown.thresholded = std::move(chosen);
  out.source = CoverSource::kThreshold;
  out.threshold_size = out.cover.size();
  out.trials.push_back({out.cover.size(), 0, 0});
  return out;
}

}  // namespace turancover
