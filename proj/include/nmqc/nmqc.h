/* Copyright 2026 The nmqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the nmqc shared library: average-fidelity computation for
 * quantum-cryptographic protocols over non-Markovian damping, dephasing,
 * and depolarizing channels.
 *
 * All functions return an nmqc_status; on any non-OK status a human-readable
 * message is available from nmqc_last_error() (thread-local). Objects are
 * opaque handles owned by the caller and released with the matching _free().
 */

#ifndef NMQC_NMQC_H
#define NMQC_NMQC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nmqc_status {
  NMQC_OK = 0,
  NMQC_ERR_ARGUMENT = 1, /* bad value passed to a function */
  NMQC_ERR_CONFIG = 2,   /* unknown key, conflicting or missing options */
  NMQC_ERR_CHANNEL = 3,  /* channel failed a physicality check */
  NMQC_ERR_IO = 4,       /* file could not be read or written */
  NMQC_ERR_VERIFY = 5,   /* verification report contains failures */
  NMQC_ERR_INTERNAL = 6  /* internal consistency check failed */
} nmqc_status;

/* Run configuration assembled from "key = value" pairs. Keys: protocol,
 * channel, regime, gamma-ratio (ratio or "slotN=r", repeatable),
 * depol-ratios ("r1,r2,r3"), initial (psi+|psi-|phi+|phi-), tmax, steps,
 * mode (analytic|oracle|both), out. */
typedef struct nmqc_config nmqc_config;

/* Sampled fidelity curve or (ratio x time) grid. */
typedef struct nmqc_curve nmqc_curve;

const char *nmqc_version(void);
const char *nmqc_status_name(nmqc_status status);

/* Message of the most recent failure on the calling thread; never NULL. */
const char *nmqc_last_error(void);

nmqc_config *nmqc_config_new(void);
void nmqc_config_free(nmqc_config *config);
nmqc_status nmqc_config_set(nmqc_config *config, const char *key,
                            const char *value);
/* UTF-8 text file of "key = value" lines; '#' starts a comment. */
nmqc_status nmqc_config_load_file(nmqc_config *config, const char *path);
/* Cross-field validation without running anything. */
nmqc_status nmqc_config_validate(const nmqc_config *config);

/* Closed-form / brute-force average fidelity at one (dimensionless) time. */
nmqc_status nmqc_fidelity_analytic(const nmqc_config *config, double t,
                                   double *out);
nmqc_status nmqc_fidelity_oracle(const nmqc_config *config, double t,
                                 double *out);

/* Sweeps the configured time grid. The curve must be freed by the caller. */
nmqc_status nmqc_sweep_run(const nmqc_config *config, nmqc_curve **out);
void nmqc_curve_free(nmqc_curve *curve);

size_t nmqc_curve_rows(const nmqc_curve *curve);
size_t nmqc_curve_cols(const nmqc_curve *curve);
const char *nmqc_curve_col_name(const nmqc_curve *curve, size_t col);
nmqc_status nmqc_curve_cell(const nmqc_curve *curve, size_t row, size_t col,
                            double *out);
/* Largest |analytic - oracle| over the grid; requires mode=both. */
nmqc_status nmqc_curve_max_abs_diff(const nmqc_curve *curve, double *out);
/* Writes the metadata header and rows as CSV; "-" means stdout. */
nmqc_status nmqc_curve_write_csv(const nmqc_curve *curve, const char *path);

/* Named figure presets. */
size_t nmqc_preset_count(void);
const char *nmqc_preset_name(size_t index);
const char *nmqc_preset_description(size_t index);

typedef void (*nmqc_path_callback)(const char *path, void *user);
/* Runs every curve of a preset and writes one CSV per curve into out_dir;
 * the callback (optional) receives each written path. */
nmqc_status nmqc_figure_run(const char *preset, const char *out_dir,
                            nmqc_path_callback on_file, void *user);

typedef void (*nmqc_line_callback)(const char *line, void *user);
/* Verifies closed forms against the brute-force simulation for every
 * protocol/channel/regime over a grid of `density` points (>= 10). Emits one
 * report line per case; returns NMQC_ERR_VERIFY if anything failed. */
nmqc_status nmqc_verify_all(int density, nmqc_line_callback on_line,
                            void *user);

#ifdef __cplusplus
}
#endif

#endif /* NMQC_NMQC_H */
