// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>
#include <string>

#include "aeromacs/errors.hpp"
#include "aeromacs/ofdma.hpp"

using namespace aeromacs;

namespace {

// true when fn throws E and the message names the expected field
template <typename E, typename F>
bool throws_naming(F&& fn, const std::string& field) {
  try {
    fn();
  } catch (const E& e) {
    return std::string(e.what()).find(field) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("ofdma");

TEST_CASE("default profile reproduces the published parameter set") {
  const OfdmaConfig cfg = aeromacs_default_profile();
  CHECK_NOTHROW(cfg.validate());

  CHECK(symbol_time_s(cfg) == 102.4e-6);  // exact: 512 / 5 MHz
  CHECK(cp_length_s(cfg) == 12.8e-6);     // exact: Ts / 8
  CHECK(cfg.cp_ratio() == 0.125);

  const double spacing = subcarrier_spacing_hz(cfg);
  CHECK(spacing == doctest::Approx(5e6 / 513.0).epsilon(1e-12));
  CHECK(spacing == doctest::Approx(9746.59).epsilon(1e-5));
  CHECK(spacing > 9700.0);
  CHECK(spacing < 10000.0);
}

TEST_CASE("profile lookup by name") {
  CHECK(profile_by_name("aeromacs-default").has_value());
  CHECK(!profile_by_name("no-such-profile").has_value());
}

TEST_CASE("subcarrier spacing examples and trade-off direction") {
  OfdmaConfig cfg = aeromacs_default_profile();

  SUBCASE("identity scaling") {
    cfg.bandwidth_hz = 513.0;
    CHECK(subcarrier_spacing_hz(cfg) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("10 MHz / 1024 subcarriers") {
    cfg.bandwidth_hz = 10e6;
    cfg.n_subcarriers = 1024;
    cfg.downlink = {720, 120, 184};
    cfg.uplink = {544, 272, 208};
    CHECK(subcarrier_spacing_hz(cfg) == doctest::Approx(9756.10).epsilon(1e-6));
  }
  SUBCASE("decreasing in subcarrier count, increasing in bandwidth") {
    double prev = 1e18;
    for (int n = 2; n <= 4096; n *= 2) {
      cfg.n_subcarriers = n;
      cfg.downlink = {n, 0, 0};
      cfg.uplink = {n, 0, 0};
      const double s = subcarrier_spacing_hz(cfg);
      CHECK(s < prev);
      prev = s;
    }
    cfg = aeromacs_default_profile();
    double prev_bw = 0.0;
    for (double bw = 1e6; bw <= 64e6; bw *= 2) {
      cfg.bandwidth_hz = bw;
      const double s = subcarrier_spacing_hz(cfg);
      CHECK(s > prev_bw);
      prev_bw = s;
    }
  }
}

TEST_CASE("symbol time examples") {
  OfdmaConfig cfg = aeromacs_default_profile();

  cfg.bandwidth_hz = 10e6;
  CHECK(symbol_time_s(cfg) == doctest::Approx(51.2e-6).epsilon(1e-14));

  cfg.bandwidth_hz = 1.0;
  cfg.n_subcarriers = 2;
  cfg.downlink = {2, 0, 0};
  cfg.uplink = {2, 0, 0};
  CHECK(symbol_time_s(cfg) == 2.0);
}

TEST_CASE("cp length scales with the ratio and with Ts") {
  OfdmaConfig cfg = aeromacs_default_profile();
  cfg.cp_ratio_log2 = 2;
  CHECK(cp_length_s(cfg) == 25.6e-6);

  // homogeneity: halving the bandwidth doubles Ts and with it the CP
  OfdmaConfig wide = aeromacs_default_profile();
  OfdmaConfig narrow = aeromacs_default_profile();
  narrow.bandwidth_hz = wide.bandwidth_hz / 2.0;
  CHECK(cp_length_s(narrow) == doctest::Approx(2.0 * cp_length_s(wide)).epsilon(1e-14));
}

TEST_CASE("cp ratio selection picks the smallest sufficient prefix") {
  CHECK(select_cp_ratio(102.4e-6, 10e-6) == 3);
  CHECK_THROWS_AS(select_cp_ratio(102.4e-6, 30e-6), NoFeasibleRatio);
  // boundary inclusive: 102.4 us / 256 = 0.4 us exactly
  CHECK(select_cp_ratio(102.4e-6, 0.4e-6) == 8);

  SUBCASE("exhaustive-scan oracle over random inputs") {
    // independent of the implementation: scan all k and keep the largest
    // feasible one
    const double ts_values[] = {10e-6, 102.4e-6, 1e-3, 0.5};
    const double frac[] = {0.0005, 0.004, 0.01, 0.06, 0.2};
    for (double ts : ts_values) {
      for (double f : frac) {
        const double spread = ts * f;
        int expected = -1;
        for (int k = 2; k <= 8; ++k)
          if (ts / (1 << k) >= spread) expected = std::max(expected, k);
        if (expected < 0) {
          CHECK_THROWS_AS(select_cp_ratio(ts, spread), NoFeasibleRatio);
        } else {
          const int got = select_cp_ratio(ts, spread);
          CHECK(got == expected);
          CHECK(ts / (1 << got) >= spread);
          if (got < 8) CHECK(ts / (1 << (got + 1)) < spread);
        }
      }
    }
  }
}

TEST_CASE("raw data rate") {
  const OfdmaConfig cfg = aeromacs_default_profile();
  CHECK(data_rate_bps(cfg, 2) == doctest::Approx(8.8889e6).epsilon(2e-5));
  CHECK(data_rate_bps(cfg, 0) == 0.0);
  CHECK(data_rate_bps(cfg, 6) == doctest::Approx(3.0 * data_rate_bps(cfg, 2)).epsilon(1e-12));

  SUBCASE("strictly decreasing in the cp ratio") {
    OfdmaConfig c = aeromacs_default_profile();
    double prev = 0.0;
    for (int k = 8; k >= 2; --k) {  // larger k = smaller G = higher rate
      c.cp_ratio_log2 = k;
      const double r = data_rate_bps(c, 2);
      if (prev != 0.0) CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("guard-interval snr loss") {
  OfdmaConfig cfg = aeromacs_default_profile();
  CHECK(snr_loss_db(cfg) == doctest::Approx(0.5115).epsilon(1e-3));

  cfg.cp_ratio_log2 = 2;
  CHECK(snr_loss_db(cfg) == doctest::Approx(-10.0 * std::log10(0.8)).epsilon(1e-12));
  CHECK(snr_loss_db(cfg) == doctest::Approx(0.9691).epsilon(1e-4));

  SUBCASE("positive everywhere and increasing with G") {
    double prev = 1e9;
    for (int k = 2; k <= 8; ++k) {
      cfg.cp_ratio_log2 = k;
      const double loss = snr_loss_db(cfg);
      CHECK(loss > 0.0);
      CHECK(loss < prev);
      prev = loss;
    }
  }
}

TEST_CASE("frame throughput") {
  const OfdmaConfig cfg = aeromacs_default_profile();
  const McsScheme qpsk_half = reference_mcs_table()[0];

  CHECK(frame_throughput_bps(cfg, qpsk_half, Direction::kDownlink, 12) ==
        doctest::Approx(864e3).epsilon(1e-12));
  CHECK(frame_throughput_bps(cfg, qpsk_half, Direction::kDownlink, 24) ==
        doctest::Approx(1728e3).epsilon(1e-12));

  SUBCASE("uplink/downlink ratio follows the data subcarrier counts") {
    const double dl = frame_throughput_bps(cfg, qpsk_half, Direction::kDownlink, 12);
    const double ul = frame_throughput_bps(cfg, qpsk_half, Direction::kUplink, 12);
    CHECK(ul / dl == doctest::Approx(272.0 / 360.0).epsilon(1e-12));
  }

  SUBCASE("linear in symbols, bits and coding rate") {
    McsScheme mcs = qpsk_half;
    const double base = frame_throughput_bps(cfg, mcs, Direction::kDownlink, 6);
    CHECK(frame_throughput_bps(cfg, mcs, Direction::kDownlink, 18) ==
          doctest::Approx(3.0 * base).epsilon(1e-12));
    mcs.bits_per_symbol = 6;
    CHECK(frame_throughput_bps(cfg, mcs, Direction::kDownlink, 6) ==
          doctest::Approx(3.0 * base).epsilon(1e-12));
    mcs.bits_per_symbol = 2;
    mcs.coding_rate = 0.75;
    CHECK(frame_throughput_bps(cfg, mcs, Direction::kDownlink, 6) ==
          doctest::Approx(1.5 * base).epsilon(1e-12));
  }

  SUBCASE("symbol budget") {
    CHECK_THROWS_AS(frame_throughput_bps(cfg, qpsk_half, Direction::kDownlink, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(frame_throughput_bps(cfg, qpsk_half, Direction::kDownlink, 25),
                    SymbolBudgetExceeded);
  }
}

TEST_CASE("reference mcs table carries the measured values") {
  const auto& table = reference_mcs_table();
  REQUIRE(table.size() == 3);
  CHECK(table[0].reference_dl_kbps == doctest::Approx(983.3));
  CHECK(table[0].reference_ul_kbps == doctest::Approx(532.4));
  CHECK(table[2].reference_dl_kbps == doctest::Approx(3595.04));
  for (const auto& mcs : table) {
    CHECK_NOTHROW(mcs.validate());
    CHECK(*mcs.reference_dl_kbps > *mcs.reference_ul_kbps);  // measured ordering
  }
}

TEST_CASE("validation names the offending field") {
  OfdmaConfig cfg = aeromacs_default_profile();

  cfg.n_subcarriers = 500;
  CHECK(throws_naming<std::invalid_argument>([&] { cfg.validate(); }, "n_subcarriers"));

  cfg = aeromacs_default_profile();
  cfg.cp_ratio_log2 = 9;
  CHECK(throws_naming<std::invalid_argument>([&] { cfg.validate(); }, "cp_ratio_log2"));

  cfg = aeromacs_default_profile();
  cfg.downlink.null = 91;
  CHECK(throws_naming<std::invalid_argument>([&] { cfg.validate(); }, "downlink"));

  cfg = aeromacs_default_profile();
  cfg.bandwidth_hz = 0.0;
  CHECK(throws_naming<std::invalid_argument>([&] { cfg.validate(); }, "bandwidth_hz"));

  McsScheme mcs{"bad", 3, 0.5, {}, {}};
  CHECK(throws_naming<std::invalid_argument>([&] { mcs.validate(); }, "bits_per_symbol"));
}

TEST_SUITE_END();
