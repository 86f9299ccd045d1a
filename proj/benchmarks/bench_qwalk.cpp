#include <benchmark/benchmark.h>

#include <cmath>

#include "qwalk/analytics.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/reduced.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

namespace {

const BipartiteInstance kCanonical(512, 256, 3, 5);

void BM_DiagonalizeReduced(benchmark::State& state) {
  const auto h = reduced::search_hamiltonian(kCanonical, WalkKind::laplacian, 1.0 / 256);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::diagonalize(h));
}
BENCHMARK(BM_DiagonalizeReduced);

// Full vertex-space diagonalization for K(n, n/2); the reduced model avoids
// this cubic cost entirely.
void BM_DiagonalizeFull(benchmark::State& state) {
  const auto n = state.range(0);
  const BipartiteInstance inst(n, n / 2, 3, 5);
  const auto h = graph::search_hamiltonian(inst, graph::MarkedSet::canonical(inst),
                                           WalkKind::laplacian, 2.0 / n);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::diagonalize(h));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DiagonalizeFull)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_PropagatorState(benchmark::State& state) {
  const spectral::Propagator prop(
      reduced::search_hamiltonian(kCanonical, WalkKind::adjacency,
                                  1.0 / std::sqrt(512.0 * 256.0)),
      reduced::state_sigma(kCanonical).to_complex());
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prop.state(t));
    t += 0.01;
  }
}
BENCHMARK(BM_PropagatorState);

void BM_FindPeak(benchmark::State& state) {
  const auto p = analytics::predict(kCanonical, Regime::laplacian_a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(experiments::find_peak(
        kCanonical, p.kind, p.gamma_crit, p.initial_state, p.targets, 2.0 * p.runtime));
  }
}
BENCHMARK(BM_FindPeak);

void BM_CriticalGammaSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        experiments::critical_gamma_search(kCanonical, Regime::adjacency));
  }
}
BENCHMARK(BM_CriticalGammaSearch)->Unit(benchmark::kMillisecond);

void BM_CouponIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytics::expected_repetitions_adjacency(kCanonical));
  }
}
BENCHMARK(BM_CouponIntegral);

}  // namespace

BENCHMARK_MAIN();
