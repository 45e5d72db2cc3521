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

#include "aeromacs/fft.hpp"
#include "aeromacs/rng.hpp"
#include "aeromacs/simulator.hpp"

using namespace aeromacs;

namespace {

void BM_FftUnitary(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  Xoshiro256pp rng(1);
  std::vector<cplx> data(n);
  for (auto& v : data) v = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  for (auto _ : state) {
    auto copy = data;
    fft_unitary(copy, false);
    benchmark::DoNotOptimize(copy.data());
  }
  state.SetComplexityN(static_cast<int64_t>(n));
}
BENCHMARK(BM_FftUnitary)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_GenerateFading(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  uint64_t trial = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_fading(n, 0.01, 64, trial++));
}
BENCHMARK(BM_GenerateFading)->Arg(64)->Arg(512);

void BM_SimulateIci(benchmark::State& state) {
  SimulationSpec spec;
  spec.n_subcarriers = 64;
  spec.fd_ts = 0.05;
  spec.trials = static_cast<int>(state.range(0));
  spec.seed = 7;
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_ici(spec));
  state.SetItemsProcessed(state.iterations() * spec.trials);
}
BENCHMARK(BM_SimulateIci)->Arg(100)->Arg(1000);

void BM_SimulateCpIsi(benchmark::State& state) {
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_cp_isi(512, 64, 50, 0.5, trials, 3));
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_SimulateCpIsi)->Arg(10)->Arg(100);

}  // namespace
