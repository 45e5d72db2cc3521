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
// Command-line front end. Subcommands:
//   params        numerology, rate and overhead report for a profile
//   coverage      link-budget LoS coverage and excess-loss cell range
//   doppler-sweep speed sweep: Doppler, ICI, signal-to-ICI, coherence (CSV)
//   max-speed     Doppler-spread speed ceiling for a subcarrier spacing
//   simulate ici  Monte Carlo ICI measurement vs the analytic value (JSON)
//   simulate cp   two-path CP/ISI symbol-error experiment (JSON)
//   plan          ground-station corridor placement
//
// Exit codes: 0 success, 1 invalid input/configuration, 2 internal error.
// All float output uses 6 significant digits; infinite sentinels are
// rendered as the string "inf" and never as IEEE infinities.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aeromacs/constants.hpp"
#include "aeromacs/errors.hpp"
#include "aeromacs/mobility.hpp"
#include "aeromacs/ofdma.hpp"
#include "aeromacs/propagation.hpp"
#include "aeromacs/simulator.hpp"

namespace {

using nlohmann::json;
using namespace aeromacs;

constexpr const char* kSchema = "aeromacs-toolkit/1";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v, const char* sentinel = "inf") {
  return v ? fmt(*v) : std::string(sentinel);
}

// Speeds accept a unit suffix: "100kmh", "27.8m/s"; bare numbers are m/s.
double parse_speed(std::string text) {
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();
  double factor = 1.0;
  const auto ends_with = [&](const std::string& suffix) {
    if (text.size() < suffix.size()) return false;
    if (text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0)
      return false;
    text.resize(text.size() - suffix.size());
    return true;
  };
  if (ends_with("km/h") || ends_with("kmh"))
    factor = 1.0 / 3.6;
  else if (ends_with("m/s") || ends_with("mps"))
    factor = 1.0;
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("speed: cannot parse '" + text + "'");
  }
  while (used < text.size() && text[used] == ' ') ++used;
  if (used != text.size())
    throw std::invalid_argument("speed: trailing garbage in '" + text + "'");
  return value * factor;
}

struct CommonOptions {
  std::string config_path;
  std::string profile = "aeromacs-default";
  OfdmaConfig cfg = aeromacs_default_profile();
  bool subcarriers_overridden = false;
  double carrier_freq_hz = 5.1e9;
  double es_dbm = 24.0;
  std::string format;  // resolved per command
  std::string output;

  // Flag values stage here so precedence stays profile < config file < flags
  // no matter the order they appear on the command line.
  std::optional<std::string> profile_flag;
  std::optional<double> bandwidth_flag;
  std::optional<int> subcarriers_flag;
  std::optional<int> cp_log2_flag;
  std::optional<int> frame_symbols_flag;
  std::optional<double> frame_duration_flag;
};

// Pre-scan for --config so file values become flag defaults; explicit flags
// then override them during the real parse.
json load_config_file(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc)
      path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0)
      path = arg.substr(9);
  }
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  json j;
  in >> j;
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  return j;
}

template <typename T>
void from_config(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

void apply_config(const json& j, CommonOptions& common) {
  std::string profile = common.profile;
  from_config(j, "profile", profile);
  if (profile != common.profile) {
    const auto found = profile_by_name(profile);
    if (!found) throw std::invalid_argument("profile: unknown name '" + profile + "'");
    common.profile = profile;
    common.cfg = *found;
  }
  from_config(j, "bandwidth_hz", common.cfg.bandwidth_hz);
  if (j.contains("n_subcarriers")) {
    common.cfg.n_subcarriers = j.at("n_subcarriers").get<int>();
    common.subcarriers_overridden = true;
  }
  from_config(j, "cp_ratio_log2", common.cfg.cp_ratio_log2);
  from_config(j, "frame_symbols", common.cfg.frame_symbols);
  from_config(j, "frame_duration_s", common.cfg.frame_duration_s);
  from_config(j, "carrier_freq_hz", common.carrier_freq_hz);
  from_config(j, "es_dbm", common.es_dbm);
  from_config(j, "format", common.format);
  from_config(j, "output", common.output);
}

// Flags shared by the analytic commands.
void add_profile_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "JSON configuration file (flags override it)");
  cmd->add_option("--profile", o.profile_flag, "named profile (aeromacs-default)");
  cmd->add_option("--bandwidth", o.bandwidth_flag, "channel bandwidth in Hz");
  cmd->add_option("--subcarriers", o.subcarriers_flag, "DFT size (power of two)");
  cmd->add_option("--cp-log2", o.cp_log2_flag, "k with G = 1/2^k, in [2,8]");
  cmd->add_option("--frame-symbols", o.frame_symbols_flag, "OFDM symbols per frame");
  cmd->add_option("--frame-duration", o.frame_duration_flag, "frame duration in seconds");
  cmd->add_option("--carrier", o.carrier_freq_hz, "carrier frequency in Hz");
  cmd->add_option("--es", o.es_dbm, "per-subcarrier signal power in dBm");
  cmd->add_option("--format", o.format, "output format: text|csv|json");
  cmd->add_option("--output", o.output, "write to file instead of stdout");
}

// Resolve profile < config < flags; an overridden DFT size gets all-data
// splits so the numerology commands keep working without six more flags.
void finalize_profile(CommonOptions& o) {
  if (o.profile_flag) {
    const auto found = profile_by_name(*o.profile_flag);
    if (!found)
      throw std::invalid_argument("profile: unknown name '" + *o.profile_flag + "'");
    o.profile = *o.profile_flag;
    o.cfg = *found;
    o.subcarriers_overridden = false;
  }
  if (o.bandwidth_flag) o.cfg.bandwidth_hz = *o.bandwidth_flag;
  if (o.subcarriers_flag) {
    o.cfg.n_subcarriers = *o.subcarriers_flag;
    o.subcarriers_overridden = true;
  }
  if (o.cp_log2_flag) o.cfg.cp_ratio_log2 = *o.cp_log2_flag;
  if (o.frame_symbols_flag) o.cfg.frame_symbols = *o.frame_symbols_flag;
  if (o.frame_duration_flag) o.cfg.frame_duration_s = *o.frame_duration_flag;
  if (o.subcarriers_overridden) {
    o.cfg.downlink = {o.cfg.n_subcarriers, 0, 0};
    o.cfg.uplink = {o.cfg.n_subcarriers, 0, 0};
  }
  o.cfg.validate();
}

void write_out(const CommonOptions& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::invalid_argument("output: cannot open " + o.output);
  out << text;
}

std::string render_kv(const std::vector<std::pair<std::string, std::string>>& rows,
                      const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  } else {
    for (const auto& [k, v] : rows) os << k << ": " << v << "\n";
  }
  return os.str();
}

std::string resolved_format(const CommonOptions& o, const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "text" && f != "csv" && f != "json")
    throw std::invalid_argument("format: must be text, csv or json");
  return f;
}

// ---------------------------------------------------------------- params --

struct ParamsOptions {
  CommonOptions common;
  int dl_symbols = 12;
};

void run_params(const ParamsOptions& opt) {
  CommonOptions o = opt.common;
  finalize_profile(o);
  const OfdmaConfig& cfg = o.cfg;
  const std::string format = resolved_format(o, "text");

  const double spacing = subcarrier_spacing_hz(cfg);
  const double ts = symbol_time_s(cfg);
  const double cp = cp_length_s(cfg);
  const int ul_symbols = cfg.frame_symbols - opt.dl_symbols;

  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "params";
    j["profile"] = o.profile;
    j["bandwidth_hz"] = cfg.bandwidth_hz;
    j["n_subcarriers"] = cfg.n_subcarriers;
    j["cp_ratio_log2"] = cfg.cp_ratio_log2;
    j["cp_ratio"] = cfg.cp_ratio();
    j["frame_symbols"] = cfg.frame_symbols;
    j["frame_duration_s"] = cfg.frame_duration_s;
    j["subcarrier_spacing_hz"] = spacing;
    j["symbol_time_s"] = ts;
    j["cp_length_s"] = cp;
    j["snr_loss_db"] = snr_loss_db(cfg);
    json rates = json::object();
    for (int b : {2, 4, 6}) rates["b" + std::to_string(b)] = data_rate_bps(cfg, b);
    j["raw_data_rate_bps"] = rates;
    json th = json::array();
    for (const auto& mcs : reference_mcs_table()) {
      json row;
      row["mcs"] = mcs.name;
      row["dl_symbols"] = opt.dl_symbols;
      row["ul_symbols"] = ul_symbols;
      row["dl_bps"] = frame_throughput_bps(cfg, mcs, Direction::kDownlink, opt.dl_symbols);
      row["ul_bps"] = ul_symbols > 0
                          ? frame_throughput_bps(cfg, mcs, Direction::kUplink, ul_symbols)
                          : 0.0;
      if (mcs.reference_dl_kbps) row["reference_dl_kbps"] = *mcs.reference_dl_kbps;
      if (mcs.reference_ul_kbps) row["reference_ul_kbps"] = *mcs.reference_ul_kbps;
      th.push_back(row);
    }
    j["frame_throughput"] = th;
    write_out(o, j.dump(2) + "\n");
    return;
  }

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("profile", o.profile);
  rows.emplace_back("bandwidth_hz", fmt(cfg.bandwidth_hz));
  rows.emplace_back("n_subcarriers", std::to_string(cfg.n_subcarriers));
  rows.emplace_back("cp_ratio", "1/" + std::to_string(1 << cfg.cp_ratio_log2) +
                                    " (k=" + std::to_string(cfg.cp_ratio_log2) + ")");
  rows.emplace_back("subcarrier_spacing_hz", fmt(spacing));
  rows.emplace_back("symbol_time_us", fmt(ts * 1e6));
  rows.emplace_back("cp_length_us", fmt(cp * 1e6));
  rows.emplace_back("snr_loss_db", fmt(snr_loss_db(cfg)));
  for (int b : {2, 4, 6})
    rows.emplace_back("raw_data_rate_mbps[b=" + std::to_string(b) + "]",
                      fmt(data_rate_bps(cfg, b) / 1e6));
  for (const auto& mcs : reference_mcs_table()) {
    rows.emplace_back(
        "frame_throughput_kbps[" + mcs.name + "][dl," + std::to_string(opt.dl_symbols) + "sym]",
        fmt(frame_throughput_bps(cfg, mcs, Direction::kDownlink, opt.dl_symbols) / 1e3));
    if (ul_symbols > 0)
      rows.emplace_back(
          "frame_throughput_kbps[" + mcs.name + "][ul," + std::to_string(ul_symbols) + "sym]",
          fmt(frame_throughput_bps(cfg, mcs, Direction::kUplink, ul_symbols) / 1e3));
  }
  write_out(o, render_kv(rows, format));
}

// -------------------------------------------------------------- coverage --

struct CoverageOptions {
  CommonOptions common;
  double max_path_loss_db = 128.0;
  double alpha_db_per_km = 7.5;
  bool allow_any_alpha = false;
  bool band_check = false;
};

void run_coverage(const CoverageOptions& opt) {
  CommonOptions o = opt.common;
  const std::string format = resolved_format(o, "text");

  LinkBudget budget;
  budget.max_path_loss_db = opt.max_path_loss_db;
  budget.carrier_freq_hz = o.carrier_freq_hz;
  budget.restrict_to_band = opt.band_check;
  ExcessLossModel model{opt.alpha_db_per_km, opt.allow_any_alpha};

  const double d_max = max_los_coverage_m(budget);
  const double d_cell = effective_cell_range_m(budget, model);

  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "coverage";
    j["max_path_loss_db"] = budget.max_path_loss_db;
    j["carrier_freq_hz"] = budget.carrier_freq_hz;
    j["alpha_db_per_km"] = model.alpha_db_per_km;
    j["max_los_coverage_m"] = d_max;
    j["effective_cell_range_m"] = d_cell;
    j["gs_antenna_gain_dbi"] = budget.gs_antenna_gain_dbi;
    j["ms_antenna_gain_dbi"] = budget.ms_antenna_gain_dbi;
    j["tx_power_dbm_per_branch"] = budget.tx_power_dbm;
    write_out(o, j.dump(2) + "\n");
    return;
  }

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("max_path_loss_db", fmt(budget.max_path_loss_db));
  rows.emplace_back("carrier_freq_hz", fmt(budget.carrier_freq_hz));
  rows.emplace_back("alpha_db_per_km", fmt(model.alpha_db_per_km));
  rows.emplace_back("max_los_coverage_km", fmt(d_max / 1e3));
  rows.emplace_back("effective_cell_range_km", fmt(d_cell / 1e3));
  // margin report: documented constants, not folded into the budget
  rows.emplace_back("gs_antenna_gain_dbi", fmt(budget.gs_antenna_gain_dbi));
  rows.emplace_back("ms_antenna_gain_dbi", fmt(budget.ms_antenna_gain_dbi));
  rows.emplace_back("tx_power_dbm_per_branch", fmt(budget.tx_power_dbm));
  write_out(o, render_kv(rows, format));
}

// --------------------------------------------------------- doppler-sweep --

struct SweepOptions {
  CommonOptions common;
  std::string min_speed = "0";
  std::string max_speed = "150kmh";
  std::string step = "5kmh";
};

void run_doppler_sweep(const SweepOptions& opt) {
  CommonOptions o = opt.common;
  finalize_profile(o);
  const std::string format = resolved_format(o, "csv");
  if (format == "text")
    throw std::invalid_argument("format: doppler-sweep emits csv or json");

  const double v_min = parse_speed(opt.min_speed);
  const double v_max = parse_speed(opt.max_speed);
  const double step = parse_speed(opt.step);
  if (v_min < 0.0 || !(v_max > v_min))
    throw std::invalid_argument("speed range: need 0 <= min < max");
  if (!(step > 0.0)) throw std::invalid_argument("step: must be > 0");

  const double ts = symbol_time_s(o.cfg);
  const int n_rows = static_cast<int>(std::floor((v_max - v_min) / step + 1e-9)) + 1;

  std::vector<MobilityAnalysis> sweep;
  sweep.reserve(static_cast<size_t>(n_rows));
  for (int i = 0; i < n_rows; ++i)
    sweep.push_back(analyze_mobility(v_min + i * step, o.carrier_freq_hz, o.es_dbm,
                                     ts, o.cfg.n_subcarriers));

  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "doppler-sweep";
    j["carrier_freq_hz"] = o.carrier_freq_hz;
    j["es_dbm"] = o.es_dbm;
    json rows = json::array();
    for (const auto& row : sweep) {
      json r;
      r["speed_mps"] = row.speed_mps;
      r["speed_kmh"] = row.speed_mps * 3.6;
      r["doppler_hz"] = row.doppler_hz;
      if (row.ici.dbm)
        r["ici_dbm"] = *row.ici.dbm;
      else
        r["ici_dbm"] = nullptr;  // no ICI at all
      if (row.signal_to_ici_db)
        r["signal_to_ici_db"] = *row.signal_to_ici_db;
      else
        r["signal_to_ici_db"] = "inf";
      if (row.coherence_time_s)
        r["coherence_ms"] = *row.coherence_time_s * 1e3;
      else
        r["coherence_ms"] = "inf";
      rows.push_back(r);
    }
    j["rows"] = rows;
    write_out(o, j.dump(2) + "\n");
    return;
  }

  std::ostringstream os;
  os << "speed_mps,speed_kmh,doppler_hz,ici_dbm,signal_to_ici_db,coherence_ms\n";
  for (const auto& row : sweep) {
    const std::string ici = row.ici.dbm ? fmt(*row.ici.dbm) : std::string();
    os << fmt(row.speed_mps) << "," << fmt(row.speed_mps * 3.6) << ","
       << fmt(row.doppler_hz) << "," << ici << ","
       << fmt_opt(row.signal_to_ici_db) << ",";
    if (row.coherence_time_s)
      os << fmt(*row.coherence_time_s * 1e3);
    else
      os << "inf";
    os << "\n";
  }
  write_out(o, os.str());
}

// -------------------------------------------------------------- max-speed --

struct MaxSpeedOptions {
  CommonOptions common;
  double spacing_hz = 10e3;  // nominal profile spacing
  bool spacing_from_profile = false;
};

void run_max_speed(const MaxSpeedOptions& opt) {
  CommonOptions o = opt.common;
  const std::string format = resolved_format(o, "text");

  double spacing = opt.spacing_hz;
  if (opt.spacing_from_profile) {
    finalize_profile(o);
    spacing = subcarrier_spacing_hz(o.cfg);
  }

  const double spread_limit = doppler_spread_limit_hz(spacing);
  const double tc_min = 1.0 / spread_limit;
  const double fd_max = kCoherenceConstant * spread_limit;
  const double v_max = max_supported_speed_mps(spacing, o.carrier_freq_hz);

  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "max-speed";
    j["subcarrier_spacing_hz"] = spacing;
    j["carrier_freq_hz"] = o.carrier_freq_hz;
    j["doppler_spread_limit_hz"] = spread_limit;
    j["min_coherence_time_s"] = tc_min;
    j["max_doppler_hz"] = fd_max;
    j["max_speed_mps"] = v_max;
    j["max_speed_kmh"] = v_max * 3.6;
    j["reported_limit_mps"] = kReportedSpeedLimitMps;
    j["reported_limit_kmh"] = kReportedSpeedLimitKmh;
    j["reported_limit_note"] = "quoted profile figure; inconsistent with the chain above";
    write_out(o, j.dump(2) + "\n");
    return;
  }

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("subcarrier_spacing_hz", fmt(spacing));
  rows.emplace_back("carrier_freq_hz", fmt(o.carrier_freq_hz));
  rows.emplace_back("doppler_spread_limit_hz", fmt(spread_limit));
  rows.emplace_back("min_coherence_time_ms", fmt(tc_min * 1e3));
  rows.emplace_back("max_doppler_hz", fmt(fd_max));
  rows.emplace_back("max_speed_mps", fmt(v_max));
  rows.emplace_back("max_speed_kmh", fmt(v_max * 3.6));
  rows.emplace_back("reported_limit_mps",
                    fmt(kReportedSpeedLimitMps) + " (inconsistent with chain)");
  rows.emplace_back("reported_limit_kmh",
                    fmt(kReportedSpeedLimitKmh) + " (inconsistent with chain)");
  write_out(o, render_kv(rows, format));
}

// --------------------------------------------------------------- simulate --

struct SimulateIciOptions {
  CommonOptions common;
  SimulationSpec spec;
  std::string offset = "sample";
  int threads = 1;
};

void run_simulate_ici(SimulateIciOptions& opt) {
  if (opt.offset == "sample")
    opt.spec.offset = IciTimeOffset::kSamplePeriod;
  else if (opt.offset == "symbol")
    opt.spec.offset = IciTimeOffset::kSymbolPeriod;
  else
    throw std::invalid_argument("offset: must be 'sample' or 'symbol'");

  const SimulationResult r = simulate_ici(opt.spec, opt.threads);

  json j;
  j["schema"] = kSchema;
  j["command"] = "simulate-ici";
  json spec;
  spec["n_subcarriers"] = opt.spec.n_subcarriers;
  spec["fd_ts"] = opt.spec.fd_ts;
  spec["trials"] = opt.spec.trials;
  spec["seed"] = opt.spec.seed;
  spec["oscillators"] = opt.spec.oscillators;
  spec["offset"] = opt.offset;
  j["spec"] = spec;
  json result;
  result["empirical_ici_norm"] = r.empirical_ici_norm;
  result["analytic_ici_norm"] = r.analytic_ici_norm;
  result["standard_error"] = r.standard_error;
  result["trials_run"] = r.trials_run;
  j["result"] = result;
  json agreement;
  const bool evaluated = r.trials_run >= 5000 && r.analytic_ici_norm > 0.0;
  agreement["evaluated"] = evaluated;
  if (evaluated) {
    agreement["pass"] = ici_agreement_pass(r);
    agreement["gap_db"] =
        r.empirical_ici_norm > 0.0
            ? json(10.0 * std::log10(r.empirical_ici_norm / r.analytic_ici_norm))
            : json("inf");
  }
  j["agreement"] = agreement;
  write_out(opt.common, j.dump(2) + "\n");
}

struct SimulateCpOptions {
  CommonOptions common;
  int n_subcarriers = 512;
  int cp_samples = 64;
  int echo_delay = 50;
  double echo_gain = 0.5;
  int trials = 1000;
  uint64_t seed = 0;
};

void run_simulate_cp(const SimulateCpOptions& opt) {
  const double ser = simulate_cp_isi(opt.n_subcarriers, opt.cp_samples,
                                     opt.echo_delay, opt.echo_gain, opt.trials,
                                     opt.seed);
  json j;
  j["schema"] = kSchema;
  j["command"] = "simulate-cp";
  json spec;
  spec["n_subcarriers"] = opt.n_subcarriers;
  spec["cp_samples"] = opt.cp_samples;
  spec["echo_delay_samples"] = opt.echo_delay;
  spec["echo_gain"] = opt.echo_gain;
  spec["trials"] = opt.trials;
  spec["seed"] = opt.seed;
  j["spec"] = spec;
  json result;
  result["symbol_error_rate"] = ser;
  result["echo_within_prefix"] = opt.echo_delay <= opt.cp_samples;
  j["result"] = result;
  write_out(opt.common, j.dump(2) + "\n");
}

// ------------------------------------------------------------------- plan --

struct PlanOptions {
  CommonOptions common;
  double length_m = 10e3;
  double radius_m = 2.5e3;
  int redundancy = 2;
};

void run_plan(const PlanOptions& opt) {
  const CorridorPlan plan = plan_corridor(opt.length_m, opt.radius_m, opt.redundancy);
  const std::string format = resolved_format(opt.common, "text");

  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "plan";
    j["length_m"] = opt.length_m;
    j["cell_radius_m"] = opt.radius_m;
    j["redundancy"] = opt.redundancy;
    j["spacing_m"] = plan.spacing_m;
    j["min_coverage"] = plan.min_coverage;
    j["positions_m"] = plan.positions_m;
    write_out(opt.common, j.dump(2) + "\n");
    return;
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "station,position_m\n";
    for (size_t i = 0; i < plan.positions_m.size(); ++i)
      os << i << "," << fmt(plan.positions_m[i]) << "\n";
    write_out(opt.common, os.str());
    return;
  }

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("stations", std::to_string(plan.positions_m.size()));
  rows.emplace_back("spacing_m", fmt(plan.spacing_m));
  rows.emplace_back("min_coverage", std::to_string(plan.min_coverage));
  std::ostringstream pos;
  for (size_t i = 0; i < plan.positions_m.size(); ++i) {
    if (i) pos << " ";
    pos << fmt(plan.positions_m[i]);
  }
  rows.emplace_back("positions_m", pos.str());
  write_out(opt.common, render_kv(rows, "text"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aeromacs-toolkit: OFDMA physical layer analysis"};
  app.require_subcommand(1);

  ParamsOptions params_opt;
  CoverageOptions coverage_opt;
  SweepOptions sweep_opt;
  MaxSpeedOptions max_speed_opt;
  SimulateIciOptions sim_ici_opt;
  SimulateCpOptions sim_cp_opt;
  PlanOptions plan_opt;

  try {
    const json file_cfg = load_config_file(argc, argv);
    apply_config(file_cfg, params_opt.common);
    apply_config(file_cfg, coverage_opt.common);
    apply_config(file_cfg, sweep_opt.common);
    apply_config(file_cfg, max_speed_opt.common);
    apply_config(file_cfg, sim_ici_opt.common);
    apply_config(file_cfg, sim_cp_opt.common);
    apply_config(file_cfg, plan_opt.common);
    if (file_cfg.contains("max_path_loss_db")) {
      coverage_opt.max_path_loss_db = file_cfg.at("max_path_loss_db").get<double>();
    }
    if (file_cfg.contains("alpha_db_per_km")) {
      coverage_opt.alpha_db_per_km = file_cfg.at("alpha_db_per_km").get<double>();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  }

  auto* params = app.add_subcommand("params", "numerology and rate report");
  add_profile_flags(params, params_opt.common);
  params->add_option("--dl-symbols", params_opt.dl_symbols,
                     "frame symbols assigned to the downlink");
  params->callback([&] { run_params(params_opt); });

  auto* coverage = app.add_subcommand("coverage", "link-budget coverage report");
  add_profile_flags(coverage, coverage_opt.common);
  coverage->add_option("--max-path-loss", coverage_opt.max_path_loss_db,
                       "maximum allowed path loss in dB");
  coverage->add_option("--alpha", coverage_opt.alpha_db_per_km,
                       "excess loss in dB/km (0 disables)");
  coverage->add_flag("--allow-any-alpha", coverage_opt.allow_any_alpha,
                     "accept alpha outside the 5-10 dB/km envelope");
  coverage->add_flag("--band-check", coverage_opt.band_check,
                     "reject carriers outside 5.091-5.150 GHz");
  coverage->callback([&] { run_coverage(coverage_opt); });

  auto* sweep = app.add_subcommand("doppler-sweep",
                                   "speed sweep: Doppler, ICI, coherence");
  add_profile_flags(sweep, sweep_opt.common);
  sweep->add_option("--min", sweep_opt.min_speed, "start speed (e.g. 0, 10kmh)");
  sweep->add_option("--max", sweep_opt.max_speed, "end speed (e.g. 150kmh)");
  sweep->add_option("--step", sweep_opt.step, "speed step (same units)");
  sweep->callback([&] { run_doppler_sweep(sweep_opt); });

  auto* max_speed = app.add_subcommand("max-speed",
                                       "Doppler-spread speed ceiling");
  add_profile_flags(max_speed, max_speed_opt.common);
  max_speed->add_option("--spacing", max_speed_opt.spacing_hz,
                        "subcarrier spacing in Hz (default: nominal 10 kHz)");
  max_speed->add_flag("--spacing-from-profile", max_speed_opt.spacing_from_profile,
                      "derive the spacing from the profile instead");
  max_speed->callback([&] { run_max_speed(max_speed_opt); });

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiments");
  simulate->require_subcommand(1);

  auto* sim_ici = simulate->add_subcommand("ici", "empirical vs analytic ICI");
  sim_ici->add_option("--config", sim_ici_opt.common.config_path,
                      "JSON configuration file (flags override it)");
  sim_ici->add_option("--subcarriers", sim_ici_opt.spec.n_subcarriers,
                      "DFT size (power of two)");
  sim_ici->add_option("--fd-ts", sim_ici_opt.spec.fd_ts,
                      "normalized Doppler f_D x Ts")->required();
  sim_ici->add_option("--trials", sim_ici_opt.spec.trials, "Monte Carlo trials");
  sim_ici->add_option("--seed", sim_ici_opt.spec.seed, "run seed (required for reproducibility)")
      ->required();
  sim_ici->add_option("--oscillators", sim_ici_opt.spec.oscillators,
                      "sum-of-sinusoids order (>= 8)");
  sim_ici->add_option("--offset", sim_ici_opt.offset,
                      "analytic time offset: sample|symbol");
  sim_ici->add_option("--threads", sim_ici_opt.threads,
                      "worker threads (result independent of this)");
  sim_ici->add_option("--output", sim_ici_opt.common.output, "write to file");
  sim_ici->callback([&] { run_simulate_ici(sim_ici_opt); });

  auto* sim_cp = simulate->add_subcommand("cp", "two-path CP/ISI experiment");
  sim_cp->add_option("--config", sim_cp_opt.common.config_path,
                     "JSON configuration file (flags override it)");
  sim_cp->add_option("--subcarriers", sim_cp_opt.n_subcarriers, "DFT size");
  sim_cp->add_option("--cp-samples", sim_cp_opt.cp_samples, "cyclic prefix length in samples");
  sim_cp->add_option("--echo-delay", sim_cp_opt.echo_delay, "echo delay in samples");
  sim_cp->add_option("--echo-gain", sim_cp_opt.echo_gain, "echo amplitude in [0,1]");
  sim_cp->add_option("--trials", sim_cp_opt.trials, "OFDM symbols to send");
  sim_cp->add_option("--seed", sim_cp_opt.seed, "run seed (required for reproducibility)")
      ->required();
  sim_cp->add_option("--output", sim_cp_opt.common.output, "write to file");
  sim_cp->callback([&] { run_simulate_cp(sim_cp_opt); });

  auto* plan = app.add_subcommand("plan", "ground-station corridor planner");
  plan->add_option("--config", plan_opt.common.config_path,
                   "JSON configuration file (flags override it)");
  plan->add_option("--length", plan_opt.length_m, "corridor length in metres");
  plan->add_option("--radius", plan_opt.radius_m, "cell radius in metres");
  plan->add_option("--redundancy", plan_opt.redundancy,
                   "minimum stations in range of every point");
  plan->add_option("--format", plan_opt.common.format, "text|csv|json");
  plan->add_option("--output", plan_opt.common.output, "write to file");
  plan->callback([&] { run_plan(plan_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
