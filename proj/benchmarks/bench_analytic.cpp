// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "aeromacs/mobility.hpp"
#include "aeromacs/ofdma.hpp"
#include "aeromacs/propagation.hpp"

using namespace aeromacs;

namespace {

void BM_BesselJ0Series(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j0(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_BesselJ0Series);

void BM_BesselJ0Asymptotic(benchmark::State& state) {
  double x = 20.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j0(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_BesselJ0Asymptotic);

void BM_NormalizedIci(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(normalized_ici_power(0.05, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_NormalizedIci)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

// The O(N^2) shape of the uncollapsed double sum, for contrast with the
// diagonal form above.
void BM_IciDoubleSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double tau_fd = 0.05 / n;
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
      for (int kp = 0; kp < n; ++kp)
        acc += one_minus_bessel_j0(2.0 * 3.141592653589793 * tau_fd * (k - kp));
    benchmark::DoNotOptimize(acc / (static_cast<double>(n) * n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_IciDoubleSum)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_EffectiveCellRange(benchmark::State& state) {
  const LinkBudget budget;
  const ExcessLossModel model;
  for (auto _ : state)
    benchmark::DoNotOptimize(effective_cell_range_m(budget, model));
}
BENCHMARK(BM_EffectiveCellRange);

void BM_MobilityRow(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze_mobility(35.9, 5.1e9, 24.0, 102.4e-6, 512));
}
BENCHMARK(BM_MobilityRow);

}  // namespace
