#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ugompertz/ugompertz.hpp"

namespace {

using namespace ugompertz;

// s and x chosen to land on each evaluation route.
void BM_LogUpperIncGamma(benchmark::State& state) {
  static const double cases[][2] = {
      {2.5, 40.0},    // continued fraction
      {7.0, 3.0},     // lower series
      {0.3, 0.2},     // small-x expansion
      {-12.5, 1e-3},  // downward recurrence
  };
  const auto& c = cases[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_upper_inc_gamma(c[0], c[1]));
  }
}
BENCHMARK(BM_LogUpperIncGamma)->DenseRange(0, 3);

void BM_Pdf(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.pdf(x));
    x = x < 0.9 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_Pdf);

void BM_Quantile(benchmark::State& state) {
  const UnitGompertz d(2.0, 0.5);
  double u = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.quantile(u));
    u = u < 0.9 ? u + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_Quantile);

void BM_Draw(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(draw(d, state.range(0), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Draw)->Range(1 << 10, 1 << 20);

void BM_TruncatedFactors(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_factor(d, 0.5));
    benchmark::DoNotOptimize(h_factor(d, 0.5));
  }
}
BENCHMARK(BM_TruncatedFactors);

void BM_PopulationLMoments(benchmark::State& state) {
  const UnitGompertz d(2.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(population_lmoments(d));
}
BENCHMARK(BM_PopulationLMoments);

void BM_SampleLMoments(benchmark::State& state) {
  const DataSample s = sample(UnitGompertz(1.0, 1.0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sample_lmoments(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleLMoments)->Range(1 << 10, 1 << 20);

void BM_FitFromPopulation(benchmark::State& state) {
  const LMomentSet target = population_lmoments(UnitGompertz(0.7, 1.8));
  for (auto _ : state) benchmark::DoNotOptimize(fit_by_lmoments(target));
}
BENCHMARK(BM_FitFromPopulation)->Unit(benchmark::kMillisecond);

void BM_EntropyClosedForm(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(tsallis(d, 2.0));
}
BENCHMARK(BM_EntropyClosedForm);

void BM_EntropyQuadrature(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsallis(d, 2.0, EntropyMethod::quadrature));
  }
}
BENCHMARK(BM_EntropyQuadrature)->Unit(benchmark::kMicrosecond);

void BM_ReconstructFromG(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_density_from_g(
        [&](double x) { return g_factor(d, x); }, 99, 1e-6));
  }
}
BENCHMARK(BM_ReconstructFromG)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  const UnitGompertz d(1.0, 1.0);
  VerifyConfig config;
  config.mc_draws = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(d, config));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
