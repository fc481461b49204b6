#include <benchmark/benchmark.h>

#include "turancover/generators.hpp"
#include "turancover/lp.hpp"
#include "turancover/oracles.hpp"
#include "turancover/rounding.hpp"
#include "turancover/setcover.hpp"

namespace {

using namespace turancover;

void BM_CoverLp(benchmark::State& state, LpMode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = random_hypergraph(n, 3, 0.3, 1);
  LpOptions lp;
  lp.mode = mode;
  lp.size_guard = 1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp_pair(h, lp));
  state.counters["edges"] = static_cast<double>(h.num_edges());
}
BENCHMARK_CAPTURE(BM_CoverLp, exact, LpMode::kExact)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_CoverLp, float, LpMode::kFloat)->Arg(8)->Arg(12)->Arg(16);

void BM_BruteTau(benchmark::State& state) {
  const auto h = random_hypergraph(static_cast<std::size_t>(state.range(0)), 3, 0.25, 2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_tau(h));
}
BENCHMARK(BM_BruteTau)->Arg(10)->Arg(13)->Arg(16);

void BM_AhtpCover(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto g = random_hypergraph_edges(2 * t, t, 20, 3);
  const auto params = RoundingParams::make(t, 5, 10);
  for (auto _ : state) benchmark::DoNotOptimize(ahtp_cover(g, params));
}
BENCHMARK(BM_AhtpCover)->Arg(4)->Arg(8)->Arg(16);

void BM_TwoColorClasses(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto b = blow_up(complete(t + 1, t), t - 1);
  std::vector<VertexId> support(b.hyper.num_vertices());
  for (VertexId v = 0; v < support.size(); ++v) support[v] = v;
  const auto params = RoundingParams::make(t, 0, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto coloring = Coloring::sample(b.base_n(), 2, ++seed);
    benchmark::DoNotOptimize(two_color_classes(b, support, coloring, params.discrepancy_threshold()));
  }
}
BENCHMARK(BM_TwoColorClasses)->Arg(12)->Arg(24);

void BM_GreedyHard(benchmark::State& state) {
  const auto s = greedy_hard_setsystem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_set_cover(s));
}
BENCHMARK(BM_GreedyHard)->Arg(20)->Arg(60);

}  // namespace
BENCHMARK_MAIN();
