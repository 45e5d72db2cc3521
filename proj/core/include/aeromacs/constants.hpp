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

#include <cmath>
#include <numbers>

namespace aeromacs {

/// Propagation speed used by every range/Doppler formula in the toolkit.
/// Kept at the rounded engineering value so link-budget figures line up
/// with the usual C-band planning tables.
inline constexpr double kSpeedOfLightMps = 2.998e8;

inline constexpr double kPi = std::numbers::pi;

/// Coherence-time constant sqrt(9 / (16 pi)), kept at full double precision.
inline const double kCoherenceConstant = std::sqrt(9.0 / (16.0 * kPi));

// dBm <-> mW. All public interfaces speak dBm; internal math is linear mW.
inline double mw_from_dbm(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double dbm_from_mw(double mw) { return 10.0 * std::log10(mw); }

inline double db_from_ratio(double ratio) { return 10.0 * std::log10(ratio); }
inline double ratio_from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace aeromacs
