// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "eqdist/rngdist.hpp"

namespace {

using namespace eqdist;

void BM_Sample(benchmark::State& state, const DistributionSpec& spec) {
  std::uint64_t stream_id = 0;
  RngStream root(99);
  for (auto _ : state) {
    auto draws = sample_log(spec, root.substream(stream_id++), 4096);
    benchmark::DoNotOptimize(draws.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 4096);
}

void BM_SampleGaussian(benchmark::State& state) {
  BM_Sample(state, DistributionSpec::complex_gaussian());
}
void BM_SampleLogPareto(benchmark::State& state) {
  BM_Sample(state, DistributionSpec::log_pareto(0.5));
}
void BM_SampleLogParetoLog(benchmark::State& state) {
  BM_Sample(state, DistributionSpec::log_pareto_log());
}

BENCHMARK(BM_SampleGaussian);
BENCHMARK(BM_SampleLogPareto);
BENCHMARK(BM_SampleLogParetoLog);

}  // namespace
