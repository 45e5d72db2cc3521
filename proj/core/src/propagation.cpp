// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "aeromacs/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aeromacs/constants.hpp"
#include "aeromacs/errors.hpp"

namespace aeromacs {

namespace {
constexpr double kBandLowHz = 5.091e9;
constexpr double kBandHighHz = 5.150e9;
}  // namespace

void LinkBudget::validate() const {
  if (!(max_path_loss_db >= 0.0))
    throw std::invalid_argument("max_path_loss_db: must be >= 0");
  if (!(carrier_freq_hz > 0.0))
    throw std::invalid_argument("carrier_freq_hz: must be > 0");
  if (restrict_to_band &&
      (carrier_freq_hz < kBandLowHz || carrier_freq_hz > kBandHighHz))
    throw std::invalid_argument(
        "carrier_freq_hz: outside the 5.091-5.150 GHz allocation");
}

void ExcessLossModel::validate() const {
  if (!(alpha_db_per_km >= 0.0))
    throw std::invalid_argument("alpha_db_per_km: must be >= 0");
  if (!allow_out_of_envelope && alpha_db_per_km != 0.0 &&
      (alpha_db_per_km < 5.0 || alpha_db_per_km > 10.0))
    throw std::invalid_argument(
        "alpha_db_per_km: outside the measured 5-10 dB/km envelope "
        "(set allow_out_of_envelope to force)");
}

double free_space_path_loss_db(double distance_m, double freq_hz) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("distance_m: must be > 0");
  if (!(freq_hz > 0.0))
    throw std::invalid_argument("freq_hz: must be > 0");
  return 20.0 * std::log10(4.0 * kPi * distance_m * freq_hz / kSpeedOfLightMps);
}

double max_los_coverage_m(const LinkBudget& budget) {
  budget.validate();
  return kSpeedOfLightMps / (4.0 * kPi * budget.carrier_freq_hz) *
         std::sqrt(std::pow(10.0, budget.max_path_loss_db / 10.0));
}

double effective_cell_range_m(const LinkBudget& budget, const ExcessLossModel& model) {
  budget.validate();
  model.validate();
  const double d_max = max_los_coverage_m(budget);
  if (model.alpha_db_per_km == 0.0) return d_max;

  const auto total_loss = [&](double d) {
    return free_space_path_loss_db(d, budget.carrier_freq_hz) +
           model.alpha_db_per_km * d / 1000.0;
  };

  // total_loss is strictly increasing; the root sits in (lo, d_max] since
  // total_loss(d_max) >= PL_max and total_loss -> -inf as d -> 0.
  double lo = d_max * 1e-12;
  double hi = d_max;
  for (int i = 0; i < 200 && (hi - lo) > 1e-9 * d_max; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (total_loss(mid) < budget.max_path_loss_db)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double delay_spread_s(double distance_m) {
  if (distance_m < 0.0)
    throw std::invalid_argument("distance_m: must be >= 0");
  return 10.2e-6 * (distance_m / 3048.0);
}

CorridorPlan plan_corridor(double length_m, double cell_radius_m, int k_min) {
  if (!(length_m > 0.0))
    throw std::invalid_argument("length_m: must be > 0");
  if (!(cell_radius_m > 0.0))
    throw std::invalid_argument("cell_radius_m: must be > 0");
  if (k_min < 1)
    throw std::invalid_argument("k_min: must be >= 1");

  // Interior points see k_min stations at spacing 2r/k_min; points near the
  // corridor ends only see stations on one side, which caps the spacing at
  // r/(k_min - 1).
  double spacing = 2.0 * cell_radius_m / k_min;
  if (k_min >= 2)
    spacing = std::min(spacing, cell_radius_m / (k_min - 1));

  int n_stations = static_cast<int>(std::ceil(length_m / spacing)) + 1;
  if (n_stations < k_min + 1) {
    n_stations = k_min + 1;
    spacing = length_m / k_min;
  }
  if (spacing < 1.0)
    throw InfeasibleCorridor("station spacing " + std::to_string(spacing) +
                             " m below 1 m; radius/redundancy degenerate");

  CorridorPlan plan;
  plan.spacing_m = spacing;
  plan.positions_m.reserve(static_cast<size_t>(n_stations));
  for (int i = 0; i < n_stations; ++i)
    plan.positions_m.push_back(std::min(i * spacing, length_m));

  // 1 m sweep postcondition: every corridor point must be within radius of
  // at least k_min stations.
  int min_cover = n_stations;
  const int steps = static_cast<int>(std::floor(length_m));
  for (int s = 0; s <= steps + 1; ++s) {
    const double x = std::min(static_cast<double>(s), length_m);
    int cover = 0;
    for (double p : plan.positions_m)
      if (std::abs(x - p) <= cell_radius_m) ++cover;
    min_cover = std::min(min_cover, cover);
  }
  plan.min_coverage = min_cover;
  if (min_cover < k_min)
    throw InfeasibleCorridor("coverage sweep found a point with only " +
                             std::to_string(min_cover) + " stations in range");
  return plan;
}

}  // namespace aeromacs
