// Serial reference sweep against the OpenMP sweep over the same partitions.
#include <benchmark/benchmark.h>

#include "occupancy/maxprob.hpp"

namespace {

using occupancy::Statistic;

template <auto Sweep>
void sweep(benchmark::State& state, Statistic statistic, unsigned g) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto s = static_cast<unsigned>(state.range(1));
  std::uint64_t visited = 0;
  for (auto _ : state) {
    auto summary = Sweep(statistic, n, s, g);
    visited = summary.visited;
    benchmark::DoNotOptimize(summary.best);
  }
  state.counters["partitions"] = static_cast<double>(visited);
  state.SetItemsProcessed(static_cast<std::int64_t>(visited) * state.iterations());
}

void serial_di(benchmark::State& st) { sweep<occupancy::kernel::sweep_serial>(st, Statistic::di, 1); }
void parallel_di(benchmark::State& st) { sweep<occupancy::kernel::sweep_parallel>(st, Statistic::di, 1); }
void serial_mult(benchmark::State& st) { sweep<occupancy::kernel::sweep_serial>(st, Statistic::multinomial, 1); }
void parallel_mult(benchmark::State& st) {
  sweep<occupancy::kernel::sweep_parallel>(st, Statistic::multinomial, 1);
}
void serial_dig(benchmark::State& st) { sweep<occupancy::kernel::sweep_serial>(st, Statistic::di_degenerate, 3); }
void parallel_dig(benchmark::State& st) {
  sweep<occupancy::kernel::sweep_parallel>(st, Statistic::di_degenerate, 3);
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({30, 30})->Args({50, 50})->Args({60, 60})->Args({200, 3})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(serial_di)->Apply(sizes);
BENCHMARK(parallel_di)->Apply(sizes)->UseRealTime();
BENCHMARK(serial_mult)->Apply(sizes);
BENCHMARK(parallel_mult)->Apply(sizes)->UseRealTime();
BENCHMARK(serial_dig)->Apply(sizes);
BENCHMARK(parallel_dig)->Apply(sizes)->UseRealTime();

BENCHMARK_MAIN();
