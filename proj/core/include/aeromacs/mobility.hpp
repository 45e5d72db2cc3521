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

#include <optional>

namespace aeromacs {

/// Zeroth-order Bessel function of the first kind. Power series below
/// x = 14, Hankel asymptotic expansion above; |x| must be <= 1e6.
/// Even in x (bit-exact: the sign is stripped before evaluation).
double bessel_j0(double x);

/// 1 - J0(x) with full relative accuracy for small x, where computing
/// bessel_j0 and subtracting would cancel. Used by the ICI sums, whose
/// terms are exactly of this form.
double one_minus_bessel_j0(double x);

/// Carrier offset v*f/c caused by relative motion, in Hz.
double doppler_shift_hz(double speed_mps, double freq_hz);

/// Which time offset the inter-carrier interference correlation sum uses
/// between subcarrier indices k and k'. The sample period Ts/N matches the
/// standard OFDM decomposition and is validated by the Monte Carlo
/// simulator; the symbol-period variant is kept for comparison because the
/// formula is sometimes quoted that way.
enum class IciTimeOffset { kSamplePeriod, kSymbolPeriod };

/// Normalized ICI power sigma^2/Es in [0, 1]:
///   1 - (1/N^2) * sum_{k,k'} J0(2 pi f_D tau (k - k'))
/// with tau the selected time offset. Evaluated in O(N) by collapsing the
/// double sum over its N - |m| equal diagonals, with each term computed as
/// (N-|m|)*(1 - J0) to keep small Doppler values well conditioned.
double normalized_ici_power(double fd_ts, int n_subcarriers,
                            IciTimeOffset offset = IciTimeOffset::kSamplePeriod);

/// ICI power with its dBm view. dbm is empty when the linear power is
/// exactly zero (static channel: "no ICI" rather than -inf dBm).
struct IciPower {
  double linear_mw = 0.0;
  std::optional<double> dbm;
};

IciPower ici_power(double es_dbm, double doppler_hz, double symbol_time_s,
                   int n_subcarriers,
                   IciTimeOffset offset = IciTimeOffset::kSamplePeriod);

/// 10*log10(Es / sigma^2); empty = infinite ratio (no ICI).
std::optional<double> signal_to_ici_db(double es_dbm, const IciPower& ici);

/// Coherence time sqrt(9/(16 pi)) / f_D ~ 0.423/f_D; empty = static
/// channel (f_D = 0, infinite coherence).
std::optional<double> coherence_time_s(double doppler_hz);

/// Doppler spread must stay below one fifth of the subcarrier spacing.
double doppler_spread_limit_hz(double subcarrier_spacing_hz);

/// Highest speed whose Doppler spread still fits the spacing margin:
/// spread_limit = spacing/5, T_c,min = 1/spread_limit,
/// f_D,max = 0.423/T_c,min, v_max = f_D,max * c / f.
double max_supported_speed_mps(double subcarrier_spacing_hz,
                               double carrier_freq_hz);

/// Widely quoted speed limit for the 5 MHz airport profile (129.25 km/h).
/// Does NOT follow from the spread-limit chain above, which gives about
/// 49.8 m/s at 5.1 GHz; both figures are reported side by side.
inline constexpr double kReportedSpeedLimitMps = 35.9;
inline constexpr double kReportedSpeedLimitKmh = 129.25;

/// One mobility sweep row: everything Doppler does to the link at a speed.
struct MobilityAnalysis {
  double speed_mps = 0.0;
  double carrier_freq_hz = 0.0;
  double doppler_hz = 0.0;
  IciPower ici;
  std::optional<double> signal_to_ici_db;  // empty = infinite (no ICI)
  std::optional<double> coherence_time_s;  // empty = infinite (static)
};

MobilityAnalysis analyze_mobility(double speed_mps, double carrier_freq_hz,
                                  double es_dbm, double symbol_time_s,
                                  int n_subcarriers,
                                  IciTimeOffset offset = IciTimeOffset::kSamplePeriod);

}  // namespace aeromacs
