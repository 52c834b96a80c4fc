// Copyright 2026 The nmqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// nmqc command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 usage/configuration/io error.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nmqc/nmqc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct ConfigDeleter {
  void operator()(nmqc_config* c) const { nmqc_config_free(c); }
};
struct CurveDeleter {
  void operator()(nmqc_curve* c) const { nmqc_curve_free(c); }
};
using ConfigPtr = std::unique_ptr<nmqc_config, ConfigDeleter>;
using CurvePtr = std::unique_ptr<nmqc_curve, CurveDeleter>;

int fail(nmqc_status status) {
  std::fprintf(stderr, "nmqc: %s: %s\n", nmqc_status_name(status),
               nmqc_last_error());
  return status == NMQC_ERR_VERIFY ? kExitVerifyFailure : kExitUsage;
}

struct SweepOptions {
  std::string config_file;
  std::string protocol, channel, regime, initial, mode, out;
  std::vector<std::string> gamma_ratios;
  std::string depol_ratios;
  double tmax = -1.0;
  int steps = -1;
  bool tmax_set = false;
  bool steps_set = false;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& opt) {
  cmd->add_option("--config", opt.config_file,
                  "config file of 'key = value' lines; flags override it");
  cmd->add_option("--protocol", opt.protocol,
                  "cqd|cdsqc|qd|qsdc|dsqc|qka|bbm|bb84|ekert|b92");
  cmd->add_option("--channel", opt.channel, "damping|dephasing|depolarizing");
  cmd->add_option("--regime", opt.regime, "strong|weak|markovian|custom");
  cmd->add_option("--gamma-ratio", opt.gamma_ratios,
                  "line-width ratio Gamma/gamma, or slotN=<ratio> per slot "
                  "(repeatable)");
  cmd->add_option("--depol-ratios", opt.depol_ratios,
                  "depolarizing ratio triple r1,r2,r3");
  cmd->add_option("--initial", opt.initial, "psi+|psi-|phi+|phi-");
  cmd->add_option("--tmax", opt.tmax, "dimensionless time-axis end")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--steps", opt.steps, "grid point count (>= 2)");
  cmd->add_option("--mode", opt.mode, "analytic|oracle|both");
  cmd->add_option("--out", opt.out, "output CSV path ('-' = stdout)");
}

// file values first, then flags, so flags win
nmqc_status apply_options(nmqc_config* cfg, const SweepOptions& opt) {
  nmqc_status st = NMQC_OK;
  auto set = [&](const char* key, const std::string& value) {
    if (st == NMQC_OK && !value.empty()) st = nmqc_config_set(cfg, key, value.c_str());
  };
  if (!opt.config_file.empty()) {
    st = nmqc_config_load_file(cfg, opt.config_file.c_str());
    if (st != NMQC_OK) return st;
  }
  set("protocol", opt.protocol);
  set("channel", opt.channel);
  set("regime", opt.regime);
  for (const std::string& r : opt.gamma_ratios) set("gamma-ratio", r);
  set("depol-ratios", opt.depol_ratios);
  set("initial", opt.initial);
  if (opt.tmax_set) set("tmax", std::to_string(opt.tmax));
  if (opt.steps_set) set("steps", std::to_string(opt.steps));
  set("mode", opt.mode);
  set("out", opt.out);
  return st;
}

int run_sweep_cmd(const SweepOptions& opt) {
  ConfigPtr cfg(nmqc_config_new());
  nmqc_status st = apply_options(cfg.get(), opt);
  if (st != NMQC_OK) return fail(st);

  nmqc_curve* raw = nullptr;
  st = nmqc_sweep_run(cfg.get(), &raw);
  if (st != NMQC_OK) return fail(st);
  CurvePtr curve(raw);

  const std::string out = opt.out.empty() ? "-" : opt.out;
  st = nmqc_curve_write_csv(curve.get(), out.c_str());
  if (st != NMQC_OK) return fail(st);

  double diff = 0.0;
  if (nmqc_curve_max_abs_diff(curve.get(), &diff) == NMQC_OK)
    std::fprintf(stderr, "max |analytic - oracle| = %.3e\n", diff);
  return kExitOk;
}

int run_figure_cmd(const std::string& name, const std::string& out_dir) {
  auto print_path = [](const char* path, void*) {
    std::printf("wrote %s\n", path);
  };
  const nmqc_status st =
      nmqc_figure_run(name.c_str(), out_dir.c_str(), print_path, nullptr);
  if (st != NMQC_OK) return fail(st);
  return kExitOk;
}

int run_verify_cmd(int density) {
  auto print_line = [](const char* line, void*) {
    std::printf("%s\n", line);
  };
  const nmqc_status st = nmqc_verify_all(density, print_line, nullptr);
  if (st == NMQC_OK) return kExitOk;
  return fail(st);
}

int run_list_presets_cmd() {
  for (size_t i = 0; i < nmqc_preset_count(); ++i)
    std::printf("%-8s %s\n", nmqc_preset_name(i), nmqc_preset_description(i));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "average fidelity of quantum-cryptographic protocols over "
      "non-Markovian channels"};
  app.set_version_flag("--version", nmqc_version());
  app.require_subcommand(1);

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "sample a fidelity curve over the time axis and emit CSV");
  add_sweep_options(sweep, sweep_opt);

  std::string figure_name;
  std::string figure_out = "figures";
  CLI::App* figure = app.add_subcommand(
      "figure", "run a named preset and write its CSV files");
  figure->add_option("name", figure_name, "preset name (see list-presets)")
      ->required();
  figure->add_option("--out", figure_out, "output directory");

  int density = 100;
  CLI::App* verify = app.add_subcommand(
      "verify", "check closed forms against the brute-force simulation");
  verify->add_option("--density", density, "time-grid points per case (>= 10)");

  app.add_subcommand("list-presets", "list the available figure presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  sweep_opt.tmax_set = sweep->count("--tmax") > 0;
  sweep_opt.steps_set = sweep->count("--steps") > 0;

  if (sweep->parsed()) return run_sweep_cmd(sweep_opt);
  if (figure->parsed()) return run_figure_cmd(figure_name, figure_out);
  if (verify->parsed()) return run_verify_cmd(density);
  return run_list_presets_cmd();
}
