#include <benchmark/benchmark.h>

#include <vector>

#include "gaussclone/gaussclone.hpp"

using namespace gaussclone;

namespace {

std::vector<double> ramp_weights(int m) {
  std::vector<double> w;
  for (int j = 0; j < m; ++j) w.push_back(0.5 + 0.37 * j);
  return w;
}

NoiseProfile ramp_profile(int n, int m) { return design_from_weights(CostWeights(ramp_weights(m)), n, m).profile; }

void BM_DesignFromWeights(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CostWeights w(ramp_weights(m));
  for (auto _ : state) benchmark::DoNotOptimize(design_from_weights(w, 1, m));
  state.SetComplexityN(m);
}
BENCHMARK(BM_DesignFromWeights)->RangeMultiplier(4)->Range(2, 4096)->Complexity();

void BM_SolveLastNoise(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const std::vector<double> partial(static_cast<std::size_t>(m - 1), 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_last_noise(partial, 1, m));
}
BENCHMARK(BM_SolveLastNoise)->Arg(10)->Arg(10000);

void BM_BuildInterferometer(benchmark::State& state) {
  const NoiseProfile p = ramp_profile(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_interferometer(p));
}
BENCHMARK(BM_BuildInterferometer)->DenseRange(2, 8, 3)->Arg(32);

void BM_FeedforwardParams(benchmark::State& state) {
  const NoiseProfile p = ramp_profile(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(feedforward_params(p));
}
BENCHMARK(BM_FeedforwardParams)->Arg(2)->Arg(8)->Arg(32);

void BM_SchemeEquivalence(benchmark::State& state) {
  const NoiseProfile p = ramp_profile(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scheme_equivalence_check(p));
}
BENCHMARK(BM_SchemeEquivalence)->Arg(3)->Arg(8);

void BM_Certificate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CostWeights w(ramp_weights(m));
  const NoiseProfile p = design_from_weights(w, 1, m).profile;
  for (auto _ : state) {
    const CertifiedProblem pr = build_problem(p, w);
    const DualCertificate c = build_certificate(pr);
    benchmark::DoNotOptimize(verify_certificate(pr, c));
  }
}
BENCHMARK(BM_Certificate)->Arg(2)->Arg(6)->Arg(16);

void BM_CostScan(benchmark::State& state) {
  const CertifiedProblem pr = build_problem(ramp_profile(1, 6), CostWeights(ramp_weights(6)));
  const DualCertificate c = build_certificate(pr);
  for (auto _ : state) benchmark::DoNotOptimize(random_feasible_cost_scan(pr, c, 1000, 7));
}
BENCHMARK(BM_CostScan)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  SimConfig cfg{symmetric_profile(1, 2), Complex(1.0, 0.0), state.range(0), 42, 8, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Args({100000, 1})->Args({100000, 0})->Args({1000000, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
