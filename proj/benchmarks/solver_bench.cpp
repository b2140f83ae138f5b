#include <benchmark/benchmark.h>

#include <string>

#include "dcm/consistency.hpp"
#include "dcm/pipeline.hpp"
#include "dcm/sampling.hpp"

namespace {

using namespace dcm;

PairwiseTable table(const std::string& name) {
  return table_from_json(read_json_file(std::string(DCM_FIXTURE_DIR) + "/tables/" + name + ".json"));
}

// Inconsistent exact table over t levels: consecutive gaps of 1 with the top
// corner cell off by one.
PairwiseTable skewed(int t) {
  GapVector d(static_cast<std::size_t>(t - 1), 1);
  auto tbl = table_from_gaps(d);
  tbl.set(1, t, Cell::exact(tbl.exact(1, t) - 1));
  return tbl;
}

void BM_RepairEnumeration(benchmark::State& state) {
  const auto t = table("s61_inconsistent");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_repairs(t));
}
BENCHMARK(BM_RepairEnumeration)->Unit(benchmark::kMicrosecond);

void BM_MinimalRepairByLevels(benchmark::State& state) {
  const auto t = skewed(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(repair_min_changes(t));
}
BENCHMARK(BM_MinimalRepairByLevels)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_Extraction(benchmark::State& state) {
  const auto t = table("s73_second");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_precise_extractions(t));
}
BENCHMARK(BM_Extraction)->Unit(benchmark::kMicrosecond);

void BM_MixedExtraction(benchmark::State& state) {
  const auto t = table("s74_mixed");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_precise_extractions(t));
}
BENCHMARK(BM_MixedExtraction)->Unit(benchmark::kMicrosecond);

void BM_HitAndRun(benchmark::State& state) {
  const auto t = table("g3_intervals");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_continuous_tables(t, n, 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HitAndRun)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SmaaEnumerate(benchmark::State& state) {
  const auto p = load_project(std::string(DCM_FIXTURE_DIR) + "/quarry.json");
  for (auto _ : state) benchmark::DoNotOptimize(run_project_smaa(p, {}));
}
BENCHMARK(BM_SmaaEnumerate)->Unit(benchmark::kMillisecond);

void BM_SmaaSample(benchmark::State& state) {
  const auto p = load_project(std::string(DCM_FIXTURE_DIR) + "/quarry.json");
  SmaaRequest req;
  req.mode = SmaaMode::Sample;
  req.seed = 7;
  req.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_project_smaa(p, req));
}
BENCHMARK(BM_SmaaSample)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
