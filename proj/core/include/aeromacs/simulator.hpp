// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <vector>

#include "aeromacs/fft.hpp"
#include "aeromacs/mobility.hpp"

namespace aeromacs {

/// Probe constellation for the ICI measurement. ICI second moments only
/// depend on the probe's average power, so QPSK (unit power, constant
/// modulus) is the default; 16-QAM exists to cross-check that claim.
enum class ProbeConstellation { kQpsk, k16Qam };

/// Monte Carlo configuration for the empirical ICI measurement.
struct SimulationSpec {
  int n_subcarriers = 64;   // power of two
  double fd_ts = 0.0;       // normalized Doppler, f_D x Ts, in [0, 1]
  int trials = 1;
  uint64_t seed = 0;
  int oscillators = 64;     // sum-of-sinusoids order M, >= 8
  IciTimeOffset offset = IciTimeOffset::kSamplePeriod;  // analytic reference
  ProbeConstellation probe = ProbeConstellation::kQpsk;

  void validate() const;
};

/// Empirical vs analytic per-subcarrier ICI power, both normalized by Es.
struct SimulationResult {
  double empirical_ici_norm = 0.0;
  double analytic_ici_norm = 0.0;
  double standard_error = 0.0;  // stdev of per-trial means / sqrt(trials)
  int trials_run = 0;
};

/// Flat Rayleigh-like fading by sum of M sinusoids with per-trial uniform
/// arrival angles and phases: unit mean power and J0(2 pi fd_tsamp l)
/// autocorrelation at lag l in expectation. fd_tsamp is Doppler times the
/// sample period.
std::vector<cplx> generate_fading(int n_samples, double fd_tsamp,
                                  int oscillators, uint64_t trial_seed);

/// One OFDM symbol per trial through the time-varying flat channel:
/// Y = DFT(h . IDFT(X)); the desired coefficient G0 is the symbol-time
/// average of h and the ICI sample is mean_k |Y_k - G0 X_k|^2. Per-trial
/// generators derive from (seed, trial index), so the result is a pure
/// function of the spec: bit-identical for any n_threads.
SimulationResult simulate_ici(const SimulationSpec& spec, int n_threads = 1);

/// Agreement gate between the empirical and analytic columns:
/// |empirical - analytic| <= max(3 SE, 0.1 dB of the analytic value).
/// Only meaningful from 5000 trials up.
bool ici_agreement_pass(const SimulationResult& result);

/// Noiseless two-path CP/ISI experiment: back-to-back CP-prefixed OFDM
/// symbols through h = delta(0) + gain * delta(delay), ideal one-tap
/// equalization with the true channel response, hard QPSK decisions.
/// Returns the symbol error rate: exactly 0 whenever the echo fits inside
/// the prefix, nonzero once it spills past it with substantial gain.
double simulate_cp_isi(int n_subcarriers, int cp_samples,
                       int echo_delay_samples, double echo_gain, int trials,
                       uint64_t seed);

}  // namespace aeromacs
