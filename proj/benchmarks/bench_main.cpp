#include "toric/intlat.hpp"
#include "toric/layers.hpp"
#include "toric/oracle.hpp"
#include "toric/subsys.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace toric;

static void BM_EnumerateCompleteF4(benchmark::State& state) {
  const auto phi = RootSystem::build(CartanType::parse("F4"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_complete(phi));
}
BENCHMARK(BM_EnumerateCompleteF4)->Unit(benchmark::kMillisecond);

static void BM_PoincareClosedForm(benchmark::State& state, const char* type) {
  const auto phi = RootSystem::build(CartanType::parse(type));
  for (auto _ : state) benchmark::DoNotOptimize(poincare(phi, PoincareRoute::ClosedForm));
}
BENCHMARK_CAPTURE(BM_PoincareClosedForm, F4, "F4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PoincareClosedForm, A7, "A7")->Unit(benchmark::kMillisecond);

static void BM_PoincareLayerSum(benchmark::State& state) {
  const auto phi = RootSystem::build(CartanType::parse("F4"));
  for (auto _ : state) benchmark::DoNotOptimize(poincare(phi, PoincareRoute::LayerSum));
}
BENCHMARK(BM_PoincareLayerSum)->Unit(benchmark::kMillisecond);

static void BM_BrutePointsF4(benchmark::State& state) {
  const auto phi = RootSystem::build(CartanType::parse("F4"));
  for (auto _ : state) benchmark::DoNotOptimize(brute_points(phi));
}
BENCHMARK(BM_BrutePointsF4)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_PosetB3(benchmark::State& state) {
  const auto phi = RootSystem::build(CartanType::parse("B3"));
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(phi));
}
BENCHMARK(BM_PosetB3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
