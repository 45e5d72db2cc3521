// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "aeromacs/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "aeromacs/constants.hpp"
#include "aeromacs/rng.hpp"

namespace aeromacs {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Unit-average-power 16-QAM levels {-3,-1,1,3}/sqrt(10).
constexpr double k16QamLevels[4] = {-3.0 * 0.31622776601683794,
                                    -1.0 * 0.31622776601683794,
                                    1.0 * 0.31622776601683794,
                                    3.0 * 0.31622776601683794};

std::vector<cplx> draw_symbols(Xoshiro256pp& rng, int n, ProbeConstellation probe) {
  std::vector<cplx> x(static_cast<size_t>(n));
  if (probe == ProbeConstellation::kQpsk) {
    for (auto& v : x)
      v = cplx(rng.coin() ? kInvSqrt2 : -kInvSqrt2,
               rng.coin() ? kInvSqrt2 : -kInvSqrt2);
  } else {
    for (auto& v : x)
      v = cplx(k16QamLevels[rng.next() & 3], k16QamLevels[rng.next() & 3]);
  }
  return x;
}

// Per-trial ICI statistic: mean over subcarriers of |Y_k - G0 X_k|^2.
double ici_trial(const SimulationSpec& spec, uint64_t trial_index) {
  const int n = spec.n_subcarriers;
  // Distinct sub-streams for the channel and the probe data.
  const auto h = generate_fading(n, spec.fd_ts / n, spec.oscillators,
                                 derive_trial_seed(spec.seed, 2 * trial_index));
  Xoshiro256pp data_rng(derive_trial_seed(spec.seed, 2 * trial_index + 1));
  const auto symbols = draw_symbols(data_rng, n, spec.probe);

  auto time_samples = idft_unitary(symbols);
  for (int i = 0; i < n; ++i) time_samples[static_cast<size_t>(i)] *= h[static_cast<size_t>(i)];
  const auto received = dft_unitary(std::move(time_samples));

  cplx g0(0.0, 0.0);
  for (const auto& v : h) g0 += v;
  g0 /= static_cast<double>(n);

  double acc = 0.0;
  for (int k = 0; k < n; ++k)
    acc += std::norm(received[static_cast<size_t>(k)] - g0 * symbols[static_cast<size_t>(k)]);
  return acc / static_cast<double>(n);
}

}  // namespace

void SimulationSpec::validate() const {
  if (n_subcarriers < 2 ||
      !std::has_single_bit(static_cast<unsigned>(n_subcarriers)))
    throw std::invalid_argument("n_subcarriers: must be a power of two >= 2");
  if (!(fd_ts >= 0.0) || fd_ts > 1.0)
    throw std::invalid_argument("fd_ts: must be in [0, 1]");
  if (trials < 1)
    throw std::invalid_argument("trials: must be >= 1");
  if (oscillators < 8)
    throw std::invalid_argument("oscillators: must be >= 8");
}

std::vector<cplx> generate_fading(int n_samples, double fd_tsamp,
                                  int oscillators, uint64_t trial_seed) {
  if (n_samples < 1)
    throw std::invalid_argument("n_samples: must be >= 1");
  if (fd_tsamp < 0.0)
    throw std::invalid_argument("fd_tsamp: must be >= 0");
  if (oscillators < 8)
    throw std::invalid_argument("oscillators: must be >= 8");

  Xoshiro256pp rng(trial_seed);
  std::vector<double> omega(static_cast<size_t>(oscillators));
  std::vector<double> phase(static_cast<size_t>(oscillators));
  for (int m = 0; m < oscillators; ++m) {
    const double alpha = rng.uniform(0.0, 2.0 * kPi);  // arrival angle
    omega[static_cast<size_t>(m)] = 2.0 * kPi * fd_tsamp * std::cos(alpha);
    phase[static_cast<size_t>(m)] = rng.uniform(0.0, 2.0 * kPi);
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(oscillators));
  std::vector<cplx> h(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    cplx acc(0.0, 0.0);
    for (int m = 0; m < oscillators; ++m)
      acc += std::polar(1.0, omega[static_cast<size_t>(m)] * i + phase[static_cast<size_t>(m)]);
    h[static_cast<size_t>(i)] = acc * scale;
  }
  return h;
}

SimulationResult simulate_ici(const SimulationSpec& spec, int n_threads) {
  spec.validate();
  if (n_threads < 1)
    throw std::invalid_argument("n_threads: must be >= 1");

  SimulationResult result;
  result.trials_run = spec.trials;
  result.analytic_ici_norm =
      normalized_ici_power(spec.fd_ts, spec.n_subcarriers, spec.offset);

  // Static channel: Y_k = G0 X_k identically, so the statistic is zero by
  // construction rather than accumulated FFT rounding noise.
  if (spec.fd_ts == 0.0) return result;

  std::vector<double> per_trial(static_cast<size_t>(spec.trials), 0.0);
  const auto run_range = [&](int begin, int end) {
    for (int t = begin; t < end; ++t)
      per_trial[static_cast<size_t>(t)] = ici_trial(spec, static_cast<uint64_t>(t));
  };

  if (n_threads == 1 || spec.trials < 2 * n_threads) {
    run_range(0, spec.trials);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (spec.trials + n_threads - 1) / n_threads;
    for (int w = 0; w < n_threads; ++w) {
      const int begin = w * chunk;
      const int end = std::min(spec.trials, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // Reduction runs in trial order regardless of how the trials were
  // scheduled, keeping the result independent of n_threads.
  double mean = 0.0;
  for (double v : per_trial) mean += v;
  mean /= static_cast<double>(spec.trials);

  double var = 0.0;
  for (double v : per_trial) var += (v - mean) * (v - mean);
  if (spec.trials > 1) var /= static_cast<double>(spec.trials - 1);

  result.empirical_ici_norm = mean;
  result.standard_error = std::sqrt(var / static_cast<double>(spec.trials));
  return result;
}

bool ici_agreement_pass(const SimulationResult& result) {
  if (result.trials_run < 5000) return false;
  const double tenth_db = result.analytic_ici_norm * (std::pow(10.0, 0.01) - 1.0);
  const double tol = std::max(3.0 * result.standard_error, tenth_db);
  return std::fabs(result.empirical_ici_norm - result.analytic_ici_norm) <= tol;
}

double simulate_cp_isi(int n_subcarriers, int cp_samples,
                       int echo_delay_samples, double echo_gain, int trials,
                       uint64_t seed) {
  if (n_subcarriers < 2 ||
      !std::has_single_bit(static_cast<unsigned>(n_subcarriers)))
    throw std::invalid_argument("n_subcarriers: must be a power of two >= 2");
  if (cp_samples < 0 || cp_samples >= n_subcarriers)
    throw std::invalid_argument("cp_samples: must be in [0, n_subcarriers)");
  if (echo_delay_samples < 0 || echo_delay_samples >= n_subcarriers)
    throw std::invalid_argument("echo_delay_samples: must be in [0, n_subcarriers)");
  if (echo_gain < 0.0 || echo_gain > 1.0)
    throw std::invalid_argument("echo_gain: must be in [0, 1]");
  if (trials < 1)
    throw std::invalid_argument("trials: must be >= 1");

  const int n = n_subcarriers;
  const int block = n + cp_samples;

  // True two-path frequency response for the one-tap equalizer.
  std::vector<cplx> channel_response(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    channel_response[static_cast<size_t>(k)] =
        1.0 + echo_gain * std::polar(1.0, -2.0 * kPi * k * echo_delay_samples /
                                              static_cast<double>(n));

  Xoshiro256pp rng(derive_trial_seed(seed, 0));

  const auto make_block = [&](const std::vector<cplx>& x) {
    std::vector<cplx> tx(static_cast<size_t>(block));
    for (int i = 0; i < cp_samples; ++i)
      tx[static_cast<size_t>(i)] = x[static_cast<size_t>(n - cp_samples + i)];
    for (int i = 0; i < n; ++i) tx[static_cast<size_t>(cp_samples + i)] = x[static_cast<size_t>(i)];
    return tx;
  };

  // Warmup symbol so the first measured symbol already has an ISI
  // predecessor.
  auto prev_symbols = draw_symbols(rng, n, ProbeConstellation::kQpsk);
  auto prev_block = make_block(idft_unitary(prev_symbols));

  long long errors = 0;
  std::vector<cplx> window(static_cast<size_t>(n));
  for (int s = 0; s < trials; ++s) {
    const auto symbols = draw_symbols(rng, n, ProbeConstellation::kQpsk);
    const auto tx = make_block(idft_unitary(symbols));

    for (int i = 0; i < n; ++i) {
      cplx v = tx[static_cast<size_t>(cp_samples + i)];
      const int back = cp_samples + i - echo_delay_samples;
      v += echo_gain * (back >= 0 ? tx[static_cast<size_t>(back)]
                                  : prev_block[static_cast<size_t>(block + back)]);
      window[static_cast<size_t>(i)] = v;
    }

    const auto received = dft_unitary(window);
    for (int k = 0; k < n; ++k) {
      const cplx hk = channel_response[static_cast<size_t>(k)];
      if (std::abs(hk) < 1e-12) {  // spectral null, symbol is undecidable
        ++errors;
        continue;
      }
      const cplx est = received[static_cast<size_t>(k)] / hk;
      const cplx ref = symbols[static_cast<size_t>(k)];
      if ((est.real() >= 0.0) != (ref.real() >= 0.0) ||
          (est.imag() >= 0.0) != (ref.imag() >= 0.0))
        ++errors;
    }
    prev_block = tx;
  }

  return static_cast<double>(errors) /
         (static_cast<double>(trials) * static_cast<double>(n));
}

}  // namespace aeromacs
