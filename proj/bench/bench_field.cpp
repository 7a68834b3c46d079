#include <benchmark/benchmark.h>

#include "stepwave/field_grid.hpp"

using namespace stepwave;

namespace {

const SourceScenario below(UnitSystem::ev_nm_fs(), 1.0, 0.5);

void BM_space_cut_serial(benchmark::State& st) {
  const auto xs = linspace(0.0, 60.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_space_cut_serial(below, 30.0, xs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_space_cut_parallel(benchmark::State& st) {
  const auto xs = linspace(0.0, 60.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_space_cut(below, 30.0, xs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_time_cut_serial(benchmark::State& st) {
  const auto ts = linspace(0.1, 100.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_time_cut_serial(below, 8.0, ts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_time_cut_parallel(benchmark::State& st) {
  const auto ts = linspace(0.1, 100.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_time_cut(below, 8.0, ts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_space_cut_serial)->Arg(1201)->Arg(20001)->UseRealTime();
BENCHMARK(BM_space_cut_parallel)->Arg(1201)->Arg(20001)->UseRealTime();
BENCHMARK(BM_time_cut_serial)->Arg(1201)->Arg(20001)->UseRealTime();
BENCHMARK(BM_time_cut_parallel)->Arg(1201)->Arg(20001)->UseRealTime();

BENCHMARK_MAIN();
