// Serial references against the OpenMP kernels. With one hardware thread the pairs should tie.
#include <benchmark/benchmark.h>

#include "uncrel/commands.hpp"
#include "uncrel/constants.hpp"
#include "uncrel/inequalities.hpp"
#include "uncrel/varoracle.hpp"

using namespace uncrel;

namespace {

const inequalities::InequalityId kHeisenberg{inequalities::InequalityKind::heisenberg_general, {2.0, 2.0}};

void BM_sweep(benchmark::State& state) {
  const auto fleet = cli::standard_fleet(2);
  for (auto _ : state) benchmark::DoNotOptimize(inequalities::sweep(kHeisenberg, fleet, 2));
}

void BM_sweep_serial(benchmark::State& state) {
  const auto fleet = cli::standard_fleet(2);
  for (auto _ : state) benchmark::DoNotOptimize(inequalities::sweep_serial(kHeisenberg, fleet, 2));
}

void BM_oracle_grid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(varoracle::oracle_grid(4));
}

void BM_oracle_grid_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(varoracle::oracle_grid_serial(4));
}

void BM_daubechies_table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(constants::daubechies_table());
}

void BM_daubechies_table_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(constants::daubechies_table_serial());
}

}  // namespace

BENCHMARK(BM_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_grid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_grid_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_daubechies_table)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_daubechies_table_serial)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
