// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "aeromacs/ofdma.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "aeromacs/errors.hpp"

namespace aeromacs {

std::string to_string(Direction d) {
  return d == Direction::kDownlink ? "dl" : "ul";
}

void OfdmaConfig::validate() const {
  if (!(bandwidth_hz > 0.0))
    throw std::invalid_argument("bandwidth_hz: must be > 0");
  if (n_subcarriers < 2 || !std::has_single_bit(static_cast<unsigned>(n_subcarriers)))
    throw std::invalid_argument("n_subcarriers: must be a power of two >= 2");
  if (cp_ratio_log2 < 2 || cp_ratio_log2 > 8)
    throw std::invalid_argument("cp_ratio_log2: must be in [2, 8]");
  if (frame_symbols < 1)
    throw std::invalid_argument("frame_symbols: must be >= 1");
  if (!(frame_duration_s > 0.0))
    throw std::invalid_argument("frame_duration_s: must be > 0");
  if (downlink.data < 0 || downlink.pilot < 0 || downlink.null < 0 ||
      downlink.total() != n_subcarriers)
    throw std::invalid_argument(
        "downlink: data+pilot+null subcarriers must equal n_subcarriers");
  if (uplink.data < 0 || uplink.pilot < 0 || uplink.null < 0 ||
      uplink.total() != n_subcarriers)
    throw std::invalid_argument(
        "uplink: data+pilot+null subcarriers must equal n_subcarriers");
}

const SubcarrierSplit& OfdmaConfig::split(Direction d) const {
  return d == Direction::kDownlink ? downlink : uplink;
}

OfdmaConfig aeromacs_default_profile() {
  OfdmaConfig cfg;
  cfg.bandwidth_hz = 5e6;
  cfg.n_subcarriers = 512;
  cfg.cp_ratio_log2 = 3;
  cfg.frame_symbols = 24;
  cfg.frame_duration_s = 5e-3;
  cfg.downlink = {360, 60, 92};
  cfg.uplink = {272, 136, 104};
  return cfg;
}

std::optional<OfdmaConfig> profile_by_name(std::string_view name) {
  if (name == "aeromacs-default") return aeromacs_default_profile();
  return std::nullopt;
}

void McsScheme::validate() const {
  if (bits_per_symbol != 2 && bits_per_symbol != 4 && bits_per_symbol != 6)
    throw std::invalid_argument("bits_per_symbol: must be 2, 4 or 6");
  if (!(coding_rate > 0.0) || !(coding_rate < 1.0))
    throw std::invalid_argument("coding_rate: must be in (0, 1)");
}

const std::vector<McsScheme>& reference_mcs_table() {
  static const std::vector<McsScheme> table = {
      {"QPSK 1/2", 2, 0.5, 983.3, 532.4},
      {"16-QAM 1/2", 4, 0.5, 2153.52, 1235.52},
      {"64-QAM 1/2", 6, 0.5, 3595.04, 1758.48},
  };
  return table;
}

double subcarrier_spacing_hz(const OfdmaConfig& cfg) {
  cfg.validate();
  return cfg.bandwidth_hz / static_cast<double>(cfg.n_subcarriers + 1);
}

double symbol_time_s(const OfdmaConfig& cfg) {
  cfg.validate();
  return static_cast<double>(cfg.n_subcarriers) / cfg.bandwidth_hz;
}

double cp_length_s(const OfdmaConfig& cfg) {
  return symbol_time_s(cfg) / static_cast<double>(1 << cfg.cp_ratio_log2);
}

int select_cp_ratio(double symbol_time_s, double max_delay_spread_s) {
  if (!(symbol_time_s > 0.0))
    throw std::invalid_argument("symbol_time_s: must be > 0");
  if (!(max_delay_spread_s > 0.0))
    throw std::invalid_argument("max_delay_spread_s: must be > 0");
  for (int k = 8; k >= 2; --k) {
    const double cp = symbol_time_s / static_cast<double>(1 << k);
    if (cp >= max_delay_spread_s) return k;
  }
  throw NoFeasibleRatio("no ratio in 1/4..1/256 covers a delay spread of " +
                        std::to_string(max_delay_spread_s * 1e6) + " us");
}

double data_rate_bps(const OfdmaConfig& cfg, int bits_per_symbol) {
  if (bits_per_symbol < 0)
    throw std::invalid_argument("bits_per_symbol: must be >= 0");
  const double ts = symbol_time_s(cfg);
  const double cp = cp_length_s(cfg);
  return static_cast<double>(cfg.n_subcarriers) * bits_per_symbol / (cp + ts);
}

double snr_loss_db(const OfdmaConfig& cfg) {
  const double ts = symbol_time_s(cfg);
  const double cp = cp_length_s(cfg);
  return -10.0 * std::log10(1.0 - cp / (cp + ts));
}

double frame_throughput_bps(const OfdmaConfig& cfg, const McsScheme& mcs,
                            Direction direction, int n_symbols) {
  cfg.validate();
  mcs.validate();
  if (n_symbols < 1)
    throw std::invalid_argument("n_symbols: must be >= 1");
  if (n_symbols > cfg.frame_symbols)
    throw SymbolBudgetExceeded("n_symbols " + std::to_string(n_symbols) +
                               " exceeds frame budget of " +
                               std::to_string(cfg.frame_symbols));
  const auto& split = cfg.split(direction);
  return static_cast<double>(split.data) * mcs.bits_per_symbol *
         mcs.coding_rate * n_symbols / cfg.frame_duration_s;
}

}  // namespace aeromacs
