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
#include <string>
#include <string_view>
#include <vector>

namespace aeromacs {

enum class Direction { kDownlink, kUplink };

std::string to_string(Direction d);

/// Per-direction subcarrier usage inside one channel.
struct SubcarrierSplit {
  int data = 0;
  int pilot = 0;
  int null = 0;

  int total() const { return data + pilot + null; }
};

/// OFDMA numerology record: channel bandwidth, DFT size, cyclic-prefix
/// ratio G = 1/2^k, frame geometry and subcarrier usage per direction.
struct OfdmaConfig {
  double bandwidth_hz = 0.0;
  int n_subcarriers = 0;    // DFT size, power of two, >= 2
  int cp_ratio_log2 = 3;    // k with G = 1/2^k, k in [2, 8]
  int frame_symbols = 0;
  double frame_duration_s = 0.0;
  SubcarrierSplit downlink;
  SubcarrierSplit uplink;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  double cp_ratio() const { return 1.0 / static_cast<double>(1 << cp_ratio_log2); }
  const SubcarrierSplit& split(Direction d) const;
};

/// The 5 MHz / 512-subcarrier airport-surface profile: k=3, 24-symbol 5 ms
/// frame, DL split 360/60/92 and UL split 272/136/104.
OfdmaConfig aeromacs_default_profile();

/// Profile lookup for configuration files; knows "aeromacs-default".
std::optional<OfdmaConfig> profile_by_name(std::string_view name);

/// Modulation-and-coding scheme. Reference throughputs are measured field
/// values carried for reporting; they are not derived from the numerology.
struct McsScheme {
  std::string name;
  int bits_per_symbol = 2;   // 2 (QPSK), 4 (16-QAM), 6 (64-QAM)
  double coding_rate = 0.5;  // in (0, 1)
  std::optional<double> reference_dl_kbps;
  std::optional<double> reference_ul_kbps;

  void validate() const;
};

/// The rate-1/2 schemes with their measured downlink/uplink throughputs.
const std::vector<McsScheme>& reference_mcs_table();

// --- Numerology -----------------------------------------------------------
//
// Two spacing conventions coexist in 802.16-style parameter tables: the
// guard-inclusive spacing BW/(N+1) and the sampling-derived symbol time
// N/BW. For the 5 MHz / 512 profile they disagree by about 0.2%
// (9746.6 Hz vs 9765.6 Hz implied). Both are exposed as written; neither
// is silently reconciled into the other.

/// Subcarrier spacing, BW / (N + 1), in Hz.
double subcarrier_spacing_hz(const OfdmaConfig& cfg);

/// Useful symbol time, N / BW, in seconds (102.4 us for the default profile).
double symbol_time_s(const OfdmaConfig& cfg);

/// Cyclic prefix length G * Ts = Ts / 2^k, in seconds.
double cp_length_s(const OfdmaConfig& cfg);

/// Largest k in [2, 8] whose prefix Ts/2^k still covers the delay spread
/// (boundary inclusive). Largest k means the smallest sufficient prefix,
/// i.e. minimum overhead. Throws NoFeasibleRatio when even k=2 falls short.
int select_cp_ratio(double symbol_time_s, double max_delay_spread_s);

/// Raw all-subcarrier rate N*b / (CP + Ts) in bit/s, before coding and
/// before pilot/null exclusion.
double data_rate_bps(const OfdmaConfig& cfg, int bits_per_symbol);

/// Guard-interval overhead expressed as SNR loss,
/// -10*log10(1 - CP/(CP + Ts)), in dB. Zero only at CP = 0.
double snr_loss_db(const OfdmaConfig& cfg);

/// MAC-visible PHY throughput for one direction given n_symbols of the
/// frame: data_subcarriers * b * coding_rate * n_symbols / frame_duration.
/// No preamble/control overhead is modelled. Throws SymbolBudgetExceeded
/// when n_symbols exceeds the frame budget.
double frame_throughput_bps(const OfdmaConfig& cfg, const McsScheme& mcs,
                            Direction direction, int n_symbols);

}  // namespace aeromacs
