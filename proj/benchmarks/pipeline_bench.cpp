#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "gtsp/harmonic.hpp"
#include "gtsp/predictor.hpp"
#include "gtsp/wavelet.hpp"

namespace {

gtsp::Window daily_window(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.003);
  gtsp::Window w;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 86400.0 * static_cast<double>(i);
    w.push_back(t, 0.004 * std::sin(0.0172 * static_cast<double>(i)) + noise(rng));
  }
  return w;
}

void BM_TrainPredict(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const gtsp::Window w = daily_window(n, 7);
  gtsp::PipelineConfig cfg;
  cfg.n = n;
  cfg.m_fixed = static_cast<std::size_t>(state.range(1));
  const double next = w.times.back() + 86400.0;
  for (auto _ : state) benchmark::DoNotOptimize(gtsp::predict_one(gtsp::train(w, cfg), next));
}
BENCHMARK(BM_TrainPredict)->Args({256, 4})->Args({1024, 16})->Args({1024, 64})->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const gtsp::Window w = daily_window(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gtsp::decompose(w.values, "db4"));
}
BENCHMARK(BM_Decompose)->Range(256, 4096);

// m = 1 through 4 is what the default search probes at each step.
void BM_WeightedFit(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const gtsp::Window w = daily_window(256, 5);
  const gtsp::FrequencyGrid grid = gtsp::frequency_grid(1.0 / 86400.0, 256, m);
  for (auto _ : state) benchmark::DoNotOptimize(gtsp::weighted_fit(w.times, w.values, w.weights, grid));
}
BENCHMARK(BM_WeightedFit)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();
