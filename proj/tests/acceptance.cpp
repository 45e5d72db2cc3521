// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------
//
// Acceptance suite. Runs every release gate at its stated tolerance and
// prints one PASS/FAIL line per criterion. The CLI binary path comes in as
// argv[1] for the reproducibility checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aeromacs/constants.hpp"
#include "aeromacs/mobility.hpp"
#include "aeromacs/ofdma.hpp"
#include "aeromacs/propagation.hpp"
#include "aeromacs/rng.hpp"
#include "aeromacs/simulator.hpp"

using namespace aeromacs;

namespace {

std::string g_cli_path;

long double j0_oracle(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m <= 200; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
    if (fabsl(term) < 1e-25L * fabsl(sum)) break;
  }
  return sum;
}

long double one_minus_j0_oracle(long double x) {
  const long double q = 0.25L * x * x;
  long double term = q, sum = q;
  for (int m = 2; m <= 200; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
    if (fabsl(term) < 1e-25L * fabsl(sum)) break;
  }
  return sum;
}

long double ici_brute_force(long double fd_ts, int n) {
  const long double tau_fd = fd_ts / n;
  const long double two_pi = 2.0L * 3.14159265358979323846L;
  long double acc = 0.0L;
  for (int k = 0; k < n; ++k)
    for (int kp = 0; kp < n; ++kp)
      acc += one_minus_j0_oracle(two_pi * tau_fd * (k - kp));
  return acc / (static_cast<long double>(n) * n);
}

int run_cli_capture(const std::string& args, std::string& out) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  out.clear();
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

// 1. Numerology: Ts = 102.4 us exact, CP = 12.8 us exact, spacing in
//    [9.70, 10.00] kHz, cp selection (102.4 us, 10 us) -> k = 3.
bool c1_numerology(std::string& detail) {
  const OfdmaConfig cfg = aeromacs_default_profile();
  const double ts = symbol_time_s(cfg);
  const double cp = cp_length_s(cfg);
  const double spacing = subcarrier_spacing_hz(cfg);
  const int k = select_cp_ratio(102.4e-6, 10e-6);
  std::ostringstream os;
  os << "Ts=" << ts * 1e6 << "us CP=" << cp * 1e6 << "us spacing=" << spacing
     << "Hz k=" << k;
  detail = os.str();
  return ts == 102.4e-6 && cp == 12.8e-6 && spacing >= 9700.0 &&
         spacing <= 10000.0 && k == 3;
}

// 2. Coverage in [11.5, 12.0] km at 128 dB / 5.1 GHz; FSPL round trip
//    within 1e-9 dB over 100 random budgets.
bool c2_coverage(std::string& detail) {
  LinkBudget budget;  // 128 dB, 5.1 GHz
  const double d = max_los_coverage_m(budget);
  double worst = 0.0;
  Xoshiro256pp rng(0xC0FFEE);
  for (int i = 0; i < 100; ++i) {
    LinkBudget b;
    b.max_path_loss_db = rng.uniform(40.0, 180.0);
    b.carrier_freq_hz = rng.uniform(1e8, 1e10);
    const double back =
        free_space_path_loss_db(max_los_coverage_m(b), b.carrier_freq_hz);
    worst = std::max(worst, std::fabs(back - b.max_path_loss_db));
  }
  std::ostringstream os;
  os << "d_max=" << d / 1e3 << "km round-trip worst=" << worst << "dB";
  detail = os.str();
  return d >= 11.5e3 && d <= 12.0e3 && worst <= 1e-9;
}

// 3. O(N) ICI equals the O(N^2) double sum within 1e-9 relative; zero
//    Doppler gives exactly zero; small-argument closed form within 2%.
bool c3_ici_analytic(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_rel = 0.0;
  for (int n : {2, 4, 8, 64}) {
    for (double f : {0.001, 0.01, 0.1, 0.5}) {
      const long double oracle = ici_brute_force(f, n);
      const double got = normalized_ici_power(f, n);
      worst_rel = std::max(
          worst_rel,
          static_cast<double>(fabsl(static_cast<long double>(got) - oracle) / oracle));
    }
  }
  bool zero_ok = normalized_ici_power(0.0, 512) == 0.0;
  double worst_closed = 0.0;
  for (int n : {2, 64, 512}) {
    for (double f : {0.001, 0.01, 0.05}) {
      const double closed =
          kPi * kPi * f * f * (1.0 - 1.0 / (static_cast<double>(n) * n)) / 6.0;
      const double got = normalized_ici_power(f, n);
      worst_closed = std::max(worst_closed, std::fabs(got - closed) / closed);
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "toeplitz-vs-brute worst=" << worst_rel
     << " closed-form worst=" << worst_closed * 100 << "% in " << elapsed << "s";
  detail = os.str();
  return worst_rel <= 1e-9 && zero_ok && worst_closed <= 0.02 && elapsed < 1.0;
}

// 4. Monte Carlo arbitration: Ns=64, fd_ts in {0.01, 0.05, 0.1}, 1e4
//    trials, M=64 -> empirical within 0.5 dB of the sample-period analytic
//    value.
bool c4_monte_carlo(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream os;
  bool ok = true;
  for (double f : {0.01, 0.05, 0.1}) {
    SimulationSpec spec;
    spec.n_subcarriers = 64;
    spec.fd_ts = f;
    spec.trials = 10000;
    spec.seed = 0xA11CE;
    spec.oscillators = 64;
    const SimulationResult r = simulate_ici(spec);
    const double gap_db =
        std::fabs(10.0 * std::log10(r.empirical_ici_norm / r.analytic_ici_norm));
    os << "fd_ts=" << f << " gap=" << gap_db << "dB ";
    ok = ok && gap_db <= 0.5 && ici_agreement_pass(r);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  os << "in " << elapsed << "s";
  detail = os.str();
  return ok && elapsed < 60.0;
}

// 5. Doppler/coherence chain values, exact spread limit and the flagged
//    quoted speed figure.
bool c5_chain(std::string& detail) {
  const double fd = doppler_shift_hz(35.9, 5.1e9);
  const auto tc = coherence_time_s(846.0);
  const double limit = doppler_spread_limit_hz(10e3);
  const double v = max_supported_speed_mps(10e3, 5.1e9);
  std::ostringstream os;
  os << "fd=" << fd << "Hz Tc(846)=" << (tc ? *tc * 1e3 : -1.0)
     << "ms limit=" << limit << "Hz v_max=" << v << "m/s quoted="
     << kReportedSpeedLimitMps << "m/s";
  detail = os.str();
  return std::fabs(fd - 610.3) <= 0.5 && tc.has_value() &&
         std::fabs(*tc - 0.500e-3) <= 0.001e-3 && limit == 2000.0 &&
         std::fabs(v - 49.8) <= 0.1 && kReportedSpeedLimitMps == 35.9;
}

// 6. CP/ISI: echo at 50 samples is clean behind a 64-sample prefix and
//    breaks behind a 32-sample prefix with a full-strength echo.
bool c6_cp_isi(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  const double clean = simulate_cp_isi(512, 64, 50, 0.5, 1000, 21);
  const double broken = simulate_cp_isi(512, 32, 50, 1.0, 1000, 21);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "ser(cp=64)=" << clean << " ser(cp=32,gain=1)=" << broken << " in "
     << elapsed << "s";
  detail = os.str();
  return clean == 0.0 && broken > 0.0 && elapsed < 10.0;
}

// 7. Fading self-test: autocorrelation within 0.02 of J0 for lags <= 32 at
//    fd_tsamp = 0.01 over at least 1e4 trials.
bool c7_fading(std::string& detail) {
  const double fd_tsamp = 0.01;
  const int trials = 12000;
  std::vector<double> corr(33, 0.0);
  double power = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto h = generate_fading(
        33, fd_tsamp, 64, derive_trial_seed(0xFADED5EEDULL, static_cast<uint64_t>(t)));
    for (int lag = 0; lag <= 32; ++lag) corr[lag] += (h[0] * std::conj(h[lag])).real();
    for (const auto& v : h) power += std::norm(v);
  }
  power /= static_cast<double>(trials) * 33;
  double worst = 0.0;
  for (int lag = 0; lag <= 32; ++lag) {
    const double est = corr[lag] / trials;
    const double ref =
        static_cast<double>(j0_oracle(2.0L * 3.14159265358979324L * fd_tsamp * lag));
    worst = std::max(worst, std::fabs(est - ref));
  }
  std::ostringstream os;
  os << "worst |acf - J0|=" << worst << " mean power=" << power << " over "
     << trials << " trials";
  detail = os.str();
  return worst <= 0.02 && std::fabs(power - 1.0) <= 0.01;
}

// 8. Bessel anchors: J0(0), J0(1), the first zero, and bit-exact evenness.
bool c8_bessel(std::string& detail) {
  const bool zero = bessel_j0(0.0) == 1.0;
  const double at_one = bessel_j0(1.0);
  const double at_root = std::fabs(bessel_j0(2.4048255577));
  bool even = true;
  for (double x : {0.25, 1.0, 2.4048255577, 9.5, 13.99, 14.01, 123.0}) {
    const double a = bessel_j0(x);
    const double b = bessel_j0(-x);
    even = even && std::memcmp(&a, &b, sizeof(double)) == 0;
  }
  std::ostringstream os;
  os << "J0(1)=" << at_one << " |J0(first zero)|=" << at_root;
  detail = os.str();
  return zero && std::fabs(at_one - 0.7651976866) <= 1e-9 && at_root < 1e-8 && even;
}

// 9. Rates: raw rate, SNR loss and frame throughput, plus ordering sanity
//    against the measured table.
bool c9_rates(std::string& detail) {
  const OfdmaConfig cfg = aeromacs_default_profile();
  const double rate = data_rate_bps(cfg, 2);
  const double loss = snr_loss_db(cfg);
  const McsScheme qpsk = reference_mcs_table()[0];
  const double th = frame_throughput_bps(cfg, qpsk, Direction::kDownlink, 12);
  bool ordering = true;
  for (const auto& mcs : reference_mcs_table())
    ordering = ordering && *mcs.reference_dl_kbps > *mcs.reference_ul_kbps;
  const double measured_ratio = th / 1e3 / *qpsk.reference_dl_kbps;
  std::ostringstream os;
  os << "rate=" << rate / 1e6 << "Mbps loss=" << loss << "dB dl12="
     << th / 1e3 << "kbps vs measured " << *qpsk.reference_dl_kbps << "kbps";
  detail = os.str();
  return std::fabs(rate - 8.8889e6) <= 1e3 && std::fabs(loss - 0.5115) <= 5e-4 &&
         std::fabs(th - 864e3) <= 1e-3 && ordering && measured_ratio > 0.1 &&
         measured_ratio < 10.0;
}

// 10. Reproducibility through the CLI: identical JSON for a fixed seed and
//     a stable golden CSV for the reference sweep.
bool c10_determinism(std::string& detail) {
  const std::string sim_args =
      "simulate ici --subcarriers 64 --fd-ts 0.05 --trials 2000 --seed 42";
  std::string sim_a, sim_b;
  if (run_cli_capture(sim_args, sim_a) != 0) return false;
  if (run_cli_capture(sim_args, sim_b) != 0) return false;

  const std::string sweep_args = "doppler-sweep --min 0 --max 150kmh --step 5kmh";
  std::string sweep_a, sweep_b;
  if (run_cli_capture(sweep_args, sweep_a) != 0) return false;
  if (run_cli_capture(sweep_args, sweep_b) != 0) return false;

  const bool header_ok =
      sweep_a.rfind("speed_mps,speed_kmh,doppler_hz,ici_dbm,signal_to_ici_db,coherence_ms\n",
                    0) == 0;
  std::ostringstream os;
  os << "simulate-ici " << (sim_a == sim_b ? "byte-identical" : "DIFFERS")
     << ", sweep " << (sweep_a == sweep_b ? "byte-identical" : "DIFFERS") << " ("
     << sweep_a.size() << " bytes)";
  detail = os.str();
  return sim_a == sim_b && !sim_a.empty() && sweep_a == sweep_b && header_ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {"numerology matches the parameter table", c1_numerology},
      {"LoS coverage and FSPL round trip", c2_coverage},
      {"analytic ICI vs brute-force double sum", c3_ici_analytic},
      {"analytic ICI vs Monte Carlo (0.5 dB)", c4_monte_carlo},
      {"Doppler/coherence chain values", c5_chain},
      {"CP/ISI two-path experiment", c6_cp_isi},
      {"fading autocorrelation self-test", c7_fading},
      {"Bessel J0 anchors and evenness", c8_bessel},
      {"rates, SNR loss and frame throughput", c9_rates},
      {"seeded CLI reproducibility", c10_determinism},
  };

  int passed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) ++passed;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << i + 1 << ". "
              << criteria[i].name << " -- " << detail << "\n";
  }

  std::cout << "acceptance: " << passed << "/" << criteria.size()
            << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
