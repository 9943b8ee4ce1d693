#include <benchmark/benchmark.h>

#include "rainbowlab/geometry.hpp"
#include "rainbowlab/rainbow.hpp"

using namespace rainbowlab;

namespace {

// a points from a general-position set in dimension a - 1.
std::vector<RationalPoint> simplex(int a) {
  const PointSet X = gen_general_position(a, std::max(1, a - 1), 3);
  return std::vector<RationalPoint>(X.points().begin(), X.points().end());
}

void BM_SquaredVolume(benchmark::State& state) {
  const auto pts = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(squared_volume(pts));
}
BENCHMARK(BM_SquaredVolume)->DenseRange(2, 6);

void BM_CayleyMenger(benchmark::State& state) {
  const auto pts = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cayley_menger_det(pts));
}
BENCHMARK(BM_CayleyMenger)->DenseRange(2, 6);

void BM_CheckRainbow(benchmark::State& state) {
  const PointSet X = gen_general_position(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_rainbow(X, 3, RainbowMode::Strict));
}
BENCHMARK(BM_CheckRainbow)->Arg(8)->Arg(16)->Arg(24);

}  // namespace
