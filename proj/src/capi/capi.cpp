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

#include "nmqc/nmqc.h"

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "core/sweep.hpp"
#include "core/version.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
nmqc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nmqc::ArgumentError& e) {
    g_last_error = e.what();
    return NMQC_ERR_ARGUMENT;
  } catch (const nmqc::ConfigError& e) {
    g_last_error = e.what();
    return NMQC_ERR_CONFIG;
  } catch (const nmqc::ChannelError& e) {
    g_last_error = e.what();
    return NMQC_ERR_CHANNEL;
  } catch (const nmqc::IoError& e) {
    g_last_error = e.what();
    return NMQC_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NMQC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NMQC_ERR_INTERNAL;
  }
}

nmqc_status invalid_handle(const char* what) {
  g_last_error = std::string(what) + ": null handle";
  return NMQC_ERR_ARGUMENT;
}

}  // namespace

struct nmqc_config {
  nmqc::ConfigBuilder builder;
};

struct nmqc_curve {
  std::variant<nmqc::FidelityCurve, nmqc::FidelityGrid> data;
  std::vector<std::string> col_names;
};

namespace {

nmqc_curve* wrap_curve(nmqc::FidelityCurve&& curve) {
  auto* out = new nmqc_curve;
  switch (curve.config.mode) {
    case nmqc::RunMode::Analytic:
      out->col_names = {"gamma_t", "fidelity_analytic"};
      break;
    case nmqc::RunMode::Oracle:
      out->col_names = {"gamma_t", "fidelity_oracle"};
      break;
    case nmqc::RunMode::Both:
      out->col_names = {"gamma_t", "fidelity_analytic", "fidelity_oracle",
                        "abs_diff"};
      break;
  }
  out->data = std::move(curve);
  return out;
}

double curve_cell_value(const nmqc::FidelityCurve& c, size_t row, size_t col) {
  if (col == 0) return c.times[row];
  switch (c.config.mode) {
    case nmqc::RunMode::Analytic:
      return c.analytic[row];
    case nmqc::RunMode::Oracle:
      return c.oracle[row];
    case nmqc::RunMode::Both:
      if (col == 1) return c.analytic[row];
      if (col == 2) return c.oracle[row];
      return std::abs(c.analytic[row] - c.oracle[row]);
  }
  return 0.0;
}

}  // namespace

extern "C" {

const char* nmqc_version(void) { return nmqc::kVersion; }

const char* nmqc_status_name(nmqc_status status) {
  switch (status) {
    case NMQC_OK: return "ok";
    case NMQC_ERR_ARGUMENT: return "argument error";
    case NMQC_ERR_CONFIG: return "configuration error";
    case NMQC_ERR_CHANNEL: return "channel error";
    case NMQC_ERR_IO: return "io error";
    case NMQC_ERR_VERIFY: return "verification failure";
    case NMQC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* nmqc_last_error(void) { return g_last_error.c_str(); }

nmqc_config* nmqc_config_new(void) { return new nmqc_config; }

void nmqc_config_free(nmqc_config* config) { delete config; }

nmqc_status nmqc_config_set(nmqc_config* config, const char* key,
                            const char* value) {
  if (!config || !key || !value) return invalid_handle("nmqc_config_set");
  return guarded([&] {
    config->builder.set(key, value);
    return NMQC_OK;
  });
}

nmqc_status nmqc_config_load_file(nmqc_config* config, const char* path) {
  if (!config || !path) return invalid_handle("nmqc_config_load_file");
  return guarded([&] {
    config->builder.load_file(path);
    return NMQC_OK;
  });
}

nmqc_status nmqc_config_validate(const nmqc_config* config) {
  if (!config) return invalid_handle("nmqc_config_validate");
  return guarded([&] {
    (void)config->builder.build();
    return NMQC_OK;
  });
}

nmqc_status nmqc_fidelity_analytic(const nmqc_config* config, double t,
                                   double* out) {
  if (!config || !out) return invalid_handle("nmqc_fidelity_analytic");
  return guarded([&] {
    const nmqc::RunConfig c = config->builder.build();
    *out = nmqc::analytic_fidelity(c.protocol, nmqc::assignment_for(c), t,
                                   c.initial)
               .value;
    return NMQC_OK;
  });
}

nmqc_status nmqc_fidelity_oracle(const nmqc_config* config, double t,
                                 double* out) {
  if (!config || !out) return invalid_handle("nmqc_fidelity_oracle");
  return guarded([&] {
    const nmqc::RunConfig c = config->builder.build();
    *out = nmqc::oracle_fidelity(nmqc::schedule_for(c.protocol, c.initial),
                                 nmqc::assignment_for(c), t);
    return NMQC_OK;
  });
}

nmqc_status nmqc_sweep_run(const nmqc_config* config, nmqc_curve** out) {
  if (!config || !out) return invalid_handle("nmqc_sweep_run");
  return guarded([&] {
    *out = wrap_curve(nmqc::run_sweep(config->builder.build()));
    return NMQC_OK;
  });
}

void nmqc_curve_free(nmqc_curve* curve) { delete curve; }

size_t nmqc_curve_rows(const nmqc_curve* curve) {
  if (!curve) return 0;
  if (const auto* c = std::get_if<nmqc::FidelityCurve>(&curve->data))
    return c->times.size();
  const auto& g = std::get<nmqc::FidelityGrid>(curve->data);
  return g.ratios.size() * g.times.size();
}

size_t nmqc_curve_cols(const nmqc_curve* curve) {
  if (!curve) return 0;
  return curve->col_names.size();
}

const char* nmqc_curve_col_name(const nmqc_curve* curve, size_t col) {
  if (!curve || col >= curve->col_names.size()) return nullptr;
  return curve->col_names[col].c_str();
}

nmqc_status nmqc_curve_cell(const nmqc_curve* curve, size_t row, size_t col,
                            double* out) {
  if (!curve || !out) return invalid_handle("nmqc_curve_cell");
  return guarded([&]() -> nmqc_status {
    if (row >= nmqc_curve_rows(curve) || col >= nmqc_curve_cols(curve)) {
      g_last_error = "nmqc_curve_cell: index out of range";
      return NMQC_ERR_ARGUMENT;
    }
    if (const auto* c = std::get_if<nmqc::FidelityCurve>(&curve->data)) {
      *out = curve_cell_value(*c, row, col);
      return NMQC_OK;
    }
    const auto& g = std::get<nmqc::FidelityGrid>(curve->data);
    const size_t ratio_index = row / g.times.size();
    const size_t time_index = row % g.times.size();
    if (col == 0)
      *out = g.ratios[ratio_index];
    else if (col == 1)
      *out = g.times[time_index];
    else
      *out = g.values[row];
    return NMQC_OK;
  });
}

nmqc_status nmqc_curve_max_abs_diff(const nmqc_curve* curve, double* out) {
  if (!curve || !out) return invalid_handle("nmqc_curve_max_abs_diff");
  return guarded([&]() -> nmqc_status {
    const auto* c = std::get_if<nmqc::FidelityCurve>(&curve->data);
    if (!c || c->config.mode != nmqc::RunMode::Both) {
      g_last_error = "nmqc_curve_max_abs_diff: curve was not run in mode both";
      return NMQC_ERR_ARGUMENT;
    }
    *out = c->max_abs_diff;
    return NMQC_OK;
  });
}

nmqc_status nmqc_curve_write_csv(const nmqc_curve* curve, const char* path) {
  if (!curve || !path) return invalid_handle("nmqc_curve_write_csv");
  return guarded([&] {
    if (const auto* c = std::get_if<nmqc::FidelityCurve>(&curve->data))
      nmqc::write_csv(*c, std::string(path));
    else
      nmqc::write_csv(std::get<nmqc::FidelityGrid>(curve->data),
                      std::string(path));
    return NMQC_OK;
  });
}

size_t nmqc_preset_count(void) { return nmqc::list_presets().size(); }

const char* nmqc_preset_name(size_t index) {
  const auto& presets = nmqc::list_presets();
  if (index >= presets.size()) return nullptr;
  return presets[index].name.c_str();
}

const char* nmqc_preset_description(size_t index) {
  const auto& presets = nmqc::list_presets();
  if (index >= presets.size()) return nullptr;
  return presets[index].description.c_str();
}

nmqc_status nmqc_figure_run(const char* preset, const char* out_dir,
                            nmqc_path_callback on_file, void* user) {
  if (!preset || !out_dir) return invalid_handle("nmqc_figure_run");
  return guarded([&] {
    nmqc::run_figure(preset, out_dir, [&](const std::string& path) {
      if (on_file) on_file(path.c_str(), user);
    });
    return NMQC_OK;
  });
}

nmqc_status nmqc_verify_all(int density, nmqc_line_callback on_line,
                            void* user) {
  return guarded([&]() -> nmqc_status {
    const bool ok = nmqc::verify_all(density, [&](const std::string& line) {
      if (on_line) on_line(line.c_str(), user);
    });
    if (!ok) {
      g_last_error = "verification failed; see report lines";
      return NMQC_ERR_VERIFY;
    }
    return NMQC_OK;
  });
}

}  // extern "C"
