// Serial reference loop (jobs = 1) against the OpenMP path.
#include <benchmark/benchmark.h>

#include "metric_lines/enumerate.hpp"
#include "metric_lines/verifier.hpp"

namespace {

using namespace metric_lines;

// Second argument: worker count. 1 takes the serial loop, anything larger
// the OpenMP loop (even on a single core).
int jobs_for(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(1));
  state.SetLabel(jobs == 1 ? "serial" : "openmp jobs=" + std::to_string(jobs));
  return jobs;
}

void BM_Enumerate(benchmark::State& state) {
  EnumerationCursor cursor;
  cursor.n = static_cast<int>(state.range(0));
  cursor.jobs = jobs_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codes(cursor));
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  VerifyOptions options;
  options.jobs = jobs_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_Verify)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

void BM_ClaimSuite(benchmark::State& state) {
  const int jobs = jobs_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_claim_suite(static_cast<int>(state.range(0)), jobs));
}
BENCHMARK(BM_ClaimSuite)->ArgsProduct({{7}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
