// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "aeromacs/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aeromacs/constants.hpp"

namespace aeromacs {

namespace {

constexpr double kSeriesCutoff = 14.0;

// Ascending series sum_m (-1)^m (x^2/4)^m / (m!)^2. Worst-case cancellation
// at the cutoff costs ~5 decimal digits, leaving ~1e-11 relative error.
double j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m <= 80; ++m) {
    term *= -q / (static_cast<double>(m) * m);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

// Hankel expansion J0(x) ~ sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4)).
// Terms are added while they keep shrinking; at the x >= 14 crossover the
// smallest term is ~1e-13, far below the 1e-9 contract.
double j0_asymptotic(double x) {
  const double inv8x = 1.0 / (8.0 * x);
  const double w = inv8x * inv8x;  // 1/(8x)^2

  double p_term = 1.0;
  double p_sum = 1.0;
  double q_term = -inv8x;
  double q_sum = q_term;
  for (int k = 0; k < 40; ++k) {
    const double fk = static_cast<double>(k);
    const double p_next =
        -p_term * (4 * fk + 1) * (4 * fk + 1) * (4 * fk + 3) * (4 * fk + 3) /
        ((2 * fk + 1) * (2 * fk + 2)) * w;
    const double q_next =
        -q_term * (4 * fk + 3) * (4 * fk + 3) * (4 * fk + 5) * (4 * fk + 5) /
        ((2 * fk + 2) * (2 * fk + 3)) * w;
    if (std::fabs(p_next) >= std::fabs(p_term) ||
        std::fabs(q_next) >= std::fabs(q_term))
      break;
    p_term = p_next;
    q_term = q_next;
    p_sum += p_term;
    q_sum += q_term;
    if (std::fabs(p_term) < 1e-18 && std::fabs(q_term) < 1e-18) break;
  }

  const double chi = x - 0.25 * kPi;
  return std::sqrt(2.0 / (kPi * x)) *
         (p_sum * std::cos(chi) - q_sum * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  x = std::fabs(x);
  if (x > 1e6)
    throw std::invalid_argument("x: |x| must be <= 1e6");
  if (x <= kSeriesCutoff) return j0_series(x);
  return j0_asymptotic(x);
}

double one_minus_bessel_j0(double x) {
  x = std::fabs(x);
  if (x > 1e6)
    throw std::invalid_argument("x: |x| must be <= 1e6");
  if (x > 1.0) return 1.0 - bessel_j0(x);
  // 1 - J0 = q - q^2/4 + q^3/36 - ... ; every term carries the small factor,
  // so there is no cancellation against the leading 1.
  const double q = 0.25 * x * x;
  double term = q;
  double sum = q;
  for (int m = 2; m <= 30; ++m) {
    term *= -q / (static_cast<double>(m) * m);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

double doppler_shift_hz(double speed_mps, double freq_hz) {
  if (speed_mps < 0.0)
    throw std::invalid_argument("speed_mps: must be >= 0");
  if (!(freq_hz > 0.0))
    throw std::invalid_argument("freq_hz: must be > 0");
  return speed_mps * freq_hz / kSpeedOfLightMps;
}

double normalized_ici_power(double fd_ts, int n_subcarriers, IciTimeOffset offset) {
  if (n_subcarriers < 2)
    throw std::invalid_argument("n_subcarriers: must be >= 2");
  if (fd_ts < 0.0)
    throw std::invalid_argument("fd_ts: must be >= 0");
  if (fd_ts == 0.0) return 0.0;

  const double n = static_cast<double>(n_subcarriers);
  const double tau_fd =
      offset == IciTimeOffset::kSamplePeriod ? fd_ts / n : fd_ts;

  // sum over diagonals m = k - k' of the N x N correlation matrix; each
  // diagonal holds N - |m| identical entries.
  double acc = 0.0;
  for (int m = 1; m < n_subcarriers; ++m)
    acc += (n - m) * one_minus_bessel_j0(2.0 * kPi * tau_fd * m);
  return std::clamp(2.0 * acc / (n * n), 0.0, 1.0);
}

IciPower ici_power(double es_dbm, double doppler_hz, double symbol_time_s,
                   int n_subcarriers, IciTimeOffset offset) {
  if (!(symbol_time_s > 0.0))
    throw std::invalid_argument("symbol_time_s: must be > 0");
  const double norm =
      normalized_ici_power(doppler_hz * symbol_time_s, n_subcarriers, offset);
  IciPower out;
  out.linear_mw = mw_from_dbm(es_dbm) * norm;
  if (out.linear_mw > 0.0) out.dbm = dbm_from_mw(out.linear_mw);
  return out;
}

std::optional<double> signal_to_ici_db(double es_dbm, const IciPower& ici) {
  if (!(ici.linear_mw > 0.0)) return std::nullopt;
  return db_from_ratio(mw_from_dbm(es_dbm) / ici.linear_mw);
}

std::optional<double> coherence_time_s(double doppler_hz) {
  if (doppler_hz < 0.0)
    throw std::invalid_argument("doppler_hz: must be >= 0");
  if (doppler_hz == 0.0) return std::nullopt;
  return kCoherenceConstant / doppler_hz;
}

double doppler_spread_limit_hz(double subcarrier_spacing_hz) {
  if (!(subcarrier_spacing_hz > 0.0))
    throw std::invalid_argument("subcarrier_spacing_hz: must be > 0");
  return subcarrier_spacing_hz / 5.0;
}

double max_supported_speed_mps(double subcarrier_spacing_hz,
                               double carrier_freq_hz) {
  if (!(carrier_freq_hz > 0.0))
    throw std::invalid_argument("carrier_freq_hz: must be > 0");
  const double spread_limit = doppler_spread_limit_hz(subcarrier_spacing_hz);
  const double doppler_max = kCoherenceConstant * spread_limit;
  return doppler_max * kSpeedOfLightMps / carrier_freq_hz;
}

MobilityAnalysis analyze_mobility(double speed_mps, double carrier_freq_hz,
                                  double es_dbm, double symbol_time_s,
                                  int n_subcarriers, IciTimeOffset offset) {
  MobilityAnalysis row;
  row.speed_mps = speed_mps;
  row.carrier_freq_hz = carrier_freq_hz;
  row.doppler_hz = doppler_shift_hz(speed_mps, carrier_freq_hz);
  row.ici = ici_power(es_dbm, row.doppler_hz, symbol_time_s, n_subcarriers, offset);
  row.signal_to_ici_db = aeromacs::signal_to_ici_db(es_dbm, row.ici);
  row.coherence_time_s = aeromacs::coherence_time_s(row.doppler_hz);
  return row;
}

}  // namespace aeromacs
