#include <benchmark/benchmark.h>

#include "rainbowlab/pattern.hpp"
#include "rainbowlab/rainbow.hpp"

using namespace rainbowlab;

namespace {

// Integer grid points: many equal distances, so the conflict hypergraph is dense.
PointSet grid(int side) {
  PointSet X(2);
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) X.push_back(RationalPoint{Rational(x), Rational(y)});
  return X;
}

void BM_MaxRainbowExact(benchmark::State& state) {
  const PointSet X = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_rainbow_subset(X, 2, RainbowMode::Plain, SearchMethod::Exact));
}
BENCHMARK(BM_MaxRainbowExact)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_MaxRainbowGreedy(benchmark::State& state) {
  const PointSet X = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_rainbow_subset(X, 2, RainbowMode::Plain, SearchMethod::Greedy));
}
BENCHMARK(BM_MaxRainbowGreedy)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Convexify(benchmark::State& state) {
  // Fully interleaved classes: the hardest layout for convexity.
  const int k = static_cast<int>(state.range(0));
  std::vector<int> labels;
  for (int i = 0; i < 8 * k; ++i) labels.push_back(i % k);
  const Partition E = Partition::from_labels(labels);
  for (auto _ : state) benchmark::DoNotOptimize(convexify(E, k, 2));
}
BENCHMARK(BM_Convexify)->DenseRange(2, 4);

}  // namespace
