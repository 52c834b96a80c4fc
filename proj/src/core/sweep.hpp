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
// Run configuration, time sweeps, CSV emission, the named figure presets,
// and the systematic closed-form-vs-oracle verification report.

#ifndef NMQC_CORE_SWEEP_HPP
#define NMQC_CORE_SWEEP_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/analytic.hpp"
#include "core/protocol.hpp"

namespace nmqc {

enum class Regime { Strong, Weak, Markovian, Custom };
enum class RunMode { Analytic, Oracle, Both };

// Coupling-regime line-width ratios Gamma/gamma.
inline constexpr double kStrongRatio = 0.01;
inline constexpr double kWeakRatio = 0.1;
inline constexpr double kMarkovianRatio = 5.0;

struct RunConfig {
  Protocol protocol = Protocol::Cqd;
  ChannelKind channel = ChannelKind::Damping;
  Regime regime = Regime::Strong;
  // Gamma/gamma per noise slot (damping/dephasing); time axis is gamma*t.
  std::array<double, 4> slot_ratios{kStrongRatio, kStrongRatio, kStrongRatio,
                                    kStrongRatio};
  // gamma_i/Gamma_i triple (depolarizing); time axis is Gamma*t.
  std::array<double, 3> depol_ratios{0.1, 0.1, 0.1};
  bool depol_markovian = false;
  BellKind initial = BellKind::PsiPlus;
  double tmax = 20.0;
  int steps = 400;
  RunMode mode = RunMode::Analytic;
  std::string out = "-";
  std::string label;
  std::string preset;

  bool time_axis_is_big_gamma() const {
    return channel == ChannelKind::Depolarizing;
  }
};

const char* regime_name(Regime r);
const char* mode_name(RunMode m);

// Builds a RunConfig from "key = value" pairs. Keys match the CLI flags:
// protocol, channel, regime, gamma-ratio (a bare ratio or "slotN=r"),
// depol-ratios ("r1,r2,r3"), initial, tmax, steps, mode, out. set() rejects
// unknown keys and malformed values immediately; cross-field rules are
// checked by build().
class ConfigBuilder {
 public:
  void set(const std::string& key, const std::string& value);
  // "key = value" lines, '#' comments, blank lines ignored.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin);
  RunConfig build() const;

 private:
  struct Raw {
    std::string protocol, channel, regime, initial, mode, out;
    std::string tmax, steps, depol_ratios;
    std::vector<std::string> gamma_ratios;
  } raw_;
};

SlotAssignment assignment_for(const RunConfig& config);

struct FidelityCurve {
  RunConfig config;
  std::vector<double> times;
  std::vector<double> analytic;  // empty unless mode is analytic/both
  std::vector<double> oracle;    // empty unless mode is oracle/both
  double max_abs_diff = 0.0;     // meaningful in mode both only
};

// Long-format surface: fidelity over (coupling ratio) x (time), ratio-major.
struct FidelityGrid {
  RunConfig config;
  std::vector<double> ratios;
  std::vector<double> times;
  std::vector<double> values;
};

FidelityCurve run_sweep(const RunConfig& config);

// One analytic curve per ratio with every slot sharing that ratio.
FidelityGrid run_grid(const RunConfig& config,
                      const std::vector<double>& ratios);

// CSV layout: '# key=value' metadata lines, one column-header line, then
// rows with 17-significant-digit values and LF line ends. Curves emit
// gamma_t,fidelity_analytic[,fidelity_oracle,abs_diff]; grids emit
// ratio,gamma_t,fidelity. A "-" path writes to stdout.
void write_csv(const FidelityCurve& curve, std::ostream& os);
void write_csv(const FidelityCurve& curve, const std::string& path);
void write_csv(const FidelityGrid& grid, std::ostream& os);
void write_csv(const FidelityGrid& grid, const std::string& path);

struct PresetEntry {
  RunConfig config;
  bool is_grid = false;
  std::vector<double> grid_ratios;
};

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& list_presets();

// Unknown names raise ConfigError listing the valid presets.
std::vector<PresetEntry> figure_preset(const std::string& name);

// Runs every entry of a preset and writes <out_dir>/<name>__<label>.csv;
// reports each written path through the callback.
void run_figure(const std::string& name, const std::string& out_dir,
                const std::function<void(const std::string&)>& on_file);

// Systematic check of every protocol x channel x regime (both Bell-state
// families where they matter): max |analytic - oracle| over a grid of
// `density` points must stay within 1e-10, and the oracle must give
// F(0) = 1. Emits one report line per case plus the corrected-normalization
// listing; returns true iff everything passed. `analytic_override`, when
// set, replaces the closed-form evaluator (used to exercise the failure
// reporting).
using AnalyticOverride = std::function<double(
    Protocol, const SlotAssignment&, double, BellKind)>;
bool verify_all(int density,
                const std::function<void(const std::string&)>& line,
                const AnalyticOverride& analytic_override = {});

}  // namespace nmqc

#endif  // NMQC_CORE_SWEEP_HPP
