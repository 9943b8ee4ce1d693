#include <benchmark/benchmark.h>

#include "rainbowlab/random.hpp"
#include "rainbowlab/ramsey.hpp"

using namespace rainbowlab;

namespace {

Coloring random_pairs(int n, int c, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Color> lex(binomial(n, 2));
  for (auto& col : lex) col = static_cast<Color>(rng.below(static_cast<std::uint64_t>(c)));
  return Coloring(n, 2, c, lex);
}

void BM_ArrowCheck(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arrow_check({6, 3, 2, 2, 0}, 1ULL << 26, threads));
}
BENCHMARK(BM_ArrowCheck)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FindHomogeneous(benchmark::State& state) {
  const Coloring g = random_pairs(static_cast<int>(state.range(0)), 2, 9);
  const auto method = state.range(1) ? HomogMethod::Stepwise : HomogMethod::Exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(find_homogeneous(g, 4, method));
}
BENCHMARK(BM_FindHomogeneous)->ArgsProduct({{12, 18, 24}, {0, 1}});

void BM_FindHomogeneousOver(benchmark::State& state) {
  const Coloring g = random_pairs(static_cast<int>(state.range(0)), 2, 11);
  const IndexSet A{0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(find_homogeneous_over(g, A, 3));
}
BENCHMARK(BM_FindHomogeneousOver)->Arg(12)->Arg(20);

}  // namespace
