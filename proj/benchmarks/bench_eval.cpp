// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "eqdist/bases.hpp"
#include "eqdist/ensembles.hpp"
#include "eqdist/stats.hpp"

namespace {

using namespace eqdist;

void BM_LogAbsEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = draw_kac(n, DistributionSpec::complex_gaussian(), 7, 0);
  const Complex z{1.1, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_abs_eval(p, z));
  }
}
BENCHMARK(BM_LogAbsEval)->RangeMultiplier(4)->Range(64, 4096);

void BM_ArrayPotential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto arr = profile_array(Profile::elliptic(), n);
  const Complex z{0.8, 0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential_from_coefficients(arr, z));
  }
}
BENCHMARK(BM_ArrayPotential)->Arg(512)->Arg(2048);

void BM_PotentialL1Grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = draw_kac(n, DistributionSpec::complex_gaussian(), 13, 0);
  const auto limit = LimitPotential::from_compact(CompactSetModel::unit_circle());
  AnnulusGrid grid;
  grid.n_r = 16;
  grid.n_theta = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential_l1_error(p, limit, grid).l1);
  }
}
BENCHMARK(BM_PotentialL1Grid)->Arg(256)->Arg(1024);

}  // namespace
