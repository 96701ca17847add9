#include <benchmark/benchmark.h>

#include "gen/gen.hpp"

namespace {

gen::Group power(std::size_t n, int k) {
  gen::Group g = gen::cyclic_group(n);
  for (int i = 1; i < k; ++i) g = gen::direct_product(g, gen::cyclic_group(n));
  return g;
}

void BM_AllSubgroups(benchmark::State& state) {
  const gen::Group g = power(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gen::all_subgroups(g));
  state.SetLabel("Z2^" + std::to_string(state.range(0)));
}
BENCHMARK(BM_AllSubgroups)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_NimOfGame(benchmark::State& state) {
  const gen::Group g = gen::direct_product(power(2, 2), power(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gen::nim_of_game(g).nim);
  state.SetLabel("Z2^2 x Z3^" + std::to_string(state.range(0)));
}
BENCHMARK(BM_NimOfGame)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NimSymmetric(benchmark::State& state) {
  const gen::Group g = gen::symmetric_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gen::nim_of_game(g).nim);
}
BENCHMARK(BM_NimSymmetric)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GrundyMemo(benchmark::State& state) {
  const gen::Group g = power(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(gen::GrundyMemo::build(g).value(0));
}
BENCHMARK(BM_GrundyMemo)->Unit(benchmark::kMillisecond);

void BM_MinGeneratingSize(benchmark::State& state) {
  const gen::Group g = power(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gen::min_generating_size(g));
}
BENCHMARK(BM_MinGeneratingSize)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
