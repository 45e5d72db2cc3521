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

#include <vector>

namespace aeromacs {

/// Link budget seen from the receiver: the maximum tolerable end-to-end
/// path loss plus the carrier it applies to. Antenna gains and TX power
/// are carried for reporting only; they are not folded into the budget,
/// which is treated as all-inclusive.
struct LinkBudget {
  double max_path_loss_db = 128.0;
  double carrier_freq_hz = 5.1e9;
  double gs_antenna_gain_dbi = 15.0;  // directional ground-station antenna
  double ms_antenna_gain_dbi = 6.0;   // omnidirectional mobile antenna
  double tx_power_dbm = 23.0;         // per antenna branch (2x23 dBm MIMO)
  bool restrict_to_band = false;      // enforce the 5.091-5.150 GHz allocation

  void validate() const;
};

/// Scalar non-LoS excess loss, linear in distance. The measured airport
/// envelope is 10-20 dB per 2 km, i.e. alpha in [5, 10] dB/km; alpha = 0
/// disables the term. Values outside the envelope need the override flag.
struct ExcessLossModel {
  double alpha_db_per_km = 7.5;
  bool allow_out_of_envelope = false;

  void validate() const;
};

/// Free-space path loss 20*log10(4*pi*d*f/c) in dB.
double free_space_path_loss_db(double distance_m, double freq_hz);

/// Maximum line-of-sight range (c / (4 pi f)) * sqrt(10^(PL/10)) in metres;
/// exact inverse of free_space_path_loss_db.
double max_los_coverage_m(const LinkBudget& budget);

/// Range at which FSPL plus the excess-loss term exhausts the budget.
/// The total-loss function is strictly increasing in distance, so the root
/// is unique; it is found by bisection on (0, max_los_coverage]. Equals
/// max_los_coverage_m exactly when alpha = 0.
double effective_cell_range_m(const LinkBudget& budget, const ExcessLossModel& model);

/// Airport-surface delay spread, scaled linearly through the measured
/// anchor of 10.2 us at 10,000 ft (3048 m).
double delay_spread_s(double distance_m);

/// Ground stations along a 1-D corridor.
struct CorridorPlan {
  std::vector<double> positions_m;  // 0 = first, <= corridor length
  double spacing_m = 0.0;           // nominal inter-station spacing
  int min_coverage = 0;             // verified minimum station count in range
};

/// Places stations on a uniform grid from 0 to length so that every point
/// of the corridor has at least k_min stations within cell_radius_m.
/// End coverage forces the spacing down to radius/(k_min - 1) for k_min >= 2
/// (2*radius/k_min alone only covers interior points); the last station is
/// clamped to the corridor end. The returned plan carries the minimum
/// coverage count verified by a 1 m sweep. Throws InfeasibleCorridor when
/// the spacing degenerates below 1 m.
CorridorPlan plan_corridor(double length_m, double cell_radius_m, int k_min);

}  // namespace aeromacs
