#include <benchmark/benchmark.h>

#include "coverkit/coverkit.hpp"

namespace {

void BM_RecoveryProfileWindows(benchmark::State& state) {
  const auto n = state.range(0);
  const auto model = coverkit::windows_model(coverkit::WindowsParams(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(coverkit::recovery_profile(model));
}
BENCHMARK(BM_RecoveryProfileWindows)->Arg(10)->Arg(14)->Arg(18);

void BM_ExpectedCyclic(benchmark::State& state) {
  const coverkit::CyclicParams p(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(coverkit::expected_cyclic(p));
}
BENCHMARK(BM_ExpectedCyclic)->Args({100, 2})->Args({400, 2})->Args({400, 20})->Unit(benchmark::kMillisecond);

void BM_ExpectedWindows(benchmark::State& state) {
  const coverkit::WindowsParams p(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(coverkit::expected_windows(p));
}
BENCHMARK(BM_ExpectedWindows)->Args({60, 5})->Args({200, 10})->Unit(benchmark::kMillisecond);

void BM_StevensExact(benchmark::State& state) {
  const coverkit::ArcParams a(coverkit::Rational(1, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coverkit::stevens_exact(a));
}
BENCHMARK(BM_StevensExact)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PolyaExpected(benchmark::State& state) {
  const coverkit::BatchParams p(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(coverkit::polya_expected(p));
}
BENCHMARK(BM_PolyaExpected)->Args({100, 5})->Args({400, 20});

}  // namespace
