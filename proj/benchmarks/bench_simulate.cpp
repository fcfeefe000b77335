#include <benchmark/benchmark.h>

#include "coverkit/coverkit.hpp"

namespace {

void run(benchmark::State& state, const coverkit::ModelSpec& spec) {
  coverkit::SimOptions opts;
  opts.threads = 1;
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coverkit::simulate(spec, trials, 1, opts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

void BM_SimulateCyclic(benchmark::State& state) { run(state, coverkit::spec::CyclicWindows{100, 5}); }
BENCHMARK(BM_SimulateCyclic)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SimulateArcs(benchmark::State& state) { run(state, coverkit::spec::Arcs{coverkit::Rational(1, 10)}); }
BENCHMARK(BM_SimulateArcs)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SimulateBatch(benchmark::State& state) { run(state, coverkit::spec::Batch{50, 5}); }
BENCHMARK(BM_SimulateBatch)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SimulateTorus(benchmark::State& state) { run(state, coverkit::spec::Torus{{16, 16}, {4, 4}}); }
BENCHMARK(BM_SimulateTorus)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
