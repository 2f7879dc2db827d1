// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "eqdist/ensembles.hpp"
#include "eqdist/roots.hpp"

namespace {

using namespace eqdist;

void BM_FindRootsKacGaussian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dist = DistributionSpec::complex_gaussian();
  std::uint64_t trial = 0;
  for (auto _ : state) {
    const auto p = draw_kac(n, dist, 42, trial++);
    auto rs = find_roots(p);
    benchmark::DoNotOptimize(rs.roots.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FindRootsKacGaussian)->RangeMultiplier(4)->Range(64, 2048)->Complexity();

void BM_FindRootsHeavyTail(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dist = DistributionSpec::log_pareto(0.5);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    const auto p = draw_kac(n, dist, 43, trial++);
    auto rs = find_roots(p);
    benchmark::DoNotOptimize(rs.roots.data());
  }
}
BENCHMARK(BM_FindRootsHeavyTail)->Arg(256)->Arg(512);

}  // namespace
