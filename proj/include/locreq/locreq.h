/*
   Copyright 2026 The locreq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOCREQ_H
#define LOCREQ_H

/* C interface to the localization-requirements library. All functions
 * return a locreq_status; on failure a message describing the last error on
 * the calling thread is available from locreq_last_error(). Handles are
 * opaque and owned by the caller once returned. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LOCREQ_BUILDING_LIBRARY)
#    define LOCREQ_API __declspec(dllexport)
#  else
#    define LOCREQ_API __declspec(dllimport)
#  endif
#else
#  define LOCREQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum locreq_status {
  LOCREQ_OK = 0,
  LOCREQ_ERR_INVALID_ARGUMENT = 1,
  LOCREQ_ERR_DOMAIN = 2,
  LOCREQ_ERR_NOT_FOUND = 3,
  LOCREQ_ERR_INVALID_TREE = 4,
  LOCREQ_ERR_INFEASIBLE_GEOMETRY = 5,
  LOCREQ_ERR_INFEASIBLE_BUDGET = 6,
  LOCREQ_ERR_PARSE = 7,
  LOCREQ_ERR_IO = 8,
  LOCREQ_ERR_INTERNAL = 99
} locreq_status;

typedef enum locreq_quantile_mode {
  LOCREQ_QUANTILE_PAPER = 0,
  LOCREQ_QUANTILE_EXACT = 1
} locreq_quantile_mode;

typedef struct locreq_triple {
  double lateral;
  double longitudinal;
  double vertical;
} locreq_triple;

typedef struct locreq_config locreq_config;
typedef struct locreq_run locreq_run;

LOCREQ_API const char* locreq_version(void);
LOCREQ_API const char* locreq_status_string(locreq_status status);
/* Message of the most recent failure on this thread; "" if none. */
LOCREQ_API const char* locreq_last_error(void);

/* ---- configuration ---------------------------------------------------- */

LOCREQ_API locreq_status locreq_config_load(const char* path,
                                            locreq_config** out);
/* The bundled default (China statistics and allocation tree). */
LOCREQ_API locreq_status locreq_config_default(locreq_config** out);
/* Override one setting, e.g. ("accuracy", "quantile_mode", "exact").
 * Relative paths resolve against the working directory. */
LOCREQ_API locreq_status locreq_config_set(locreq_config* config,
                                           const char* section,
                                           const char* key, const char* value);
/* Writes the effective configuration; reloading it reproduces the run. */
LOCREQ_API locreq_status locreq_config_dump(const locreq_config* config,
                                            const char* path);
LOCREQ_API void locreq_config_free(locreq_config* config);

/* ---- pipeline --------------------------------------------------------- */

/* command: "risk-alloc", "alert-limits", "accuracy", "curves", "mc", "all".
 * On success *out lists the artifacts written and any warnings. */
LOCREQ_API locreq_status locreq_run_command(const locreq_config* config,
                                            const char* command,
                                            const char* output_dir,
                                            locreq_run** out);
LOCREQ_API size_t locreq_run_artifact_count(const locreq_run* run);
LOCREQ_API const char* locreq_run_artifact(const locreq_run* run, size_t index);
LOCREQ_API size_t locreq_run_warning_count(const locreq_run* run);
LOCREQ_API const char* locreq_run_warning(const locreq_run* run, size_t index);
LOCREQ_API void locreq_run_free(locreq_run* run);

/* ---- numerics --------------------------------------------------------- */

LOCREQ_API locreq_status locreq_total_integrity_budget(double tls, double p_fi,
                                                       double* out);
/* Fleet mileage route when total_miles < 0 (treated as absent). */
LOCREQ_API locreq_status locreq_vehicle_failure_rate(
    double crashes, double total_miles, double fleet_size,
    double km_per_vehicle, double km_to_mile, double attribution_fraction,
    double* out);
/* Copies the ISO 26262 and DO-178 labels of the band containing
 * rate_per_hour into buffers of label_size bytes; *below_scale is set (and
 * the labels left empty) when the rate is under the lowest band. */
LOCREQ_API locreq_status locreq_safety_level(double rate_per_hour,
                                             int* below_scale, char* iso_label,
                                             char* dal_label,
                                             size_t label_size);

LOCREQ_API locreq_status locreq_standard_normal_cdf(double z, double* out);
LOCREQ_API locreq_status locreq_two_sided_sigma(double confidence,
                                                locreq_quantile_mode mode,
                                                double* out);
LOCREQ_API locreq_status locreq_confidence_ratio(double high, double low,
                                                 locreq_quantile_mode mode,
                                                 double* out);

LOCREQ_API locreq_status locreq_superelevation_radius(double speed_kmh,
                                                      double lateral_friction,
                                                      double superelevation,
                                                      double* out);
LOCREQ_API locreq_status locreq_curve_longitudinal_extent(double x,
                                                          double lane_width,
                                                          double radius,
                                                          double* out);
LOCREQ_API locreq_status locreq_curve_lateral_extent(double y, double lane_width,
                                                     double radius, double* out);

/* Alert limits for a tabulated design speed using the bundled road
 * standards. */
LOCREQ_API locreq_status locreq_solve_scenario(
    double speed_kmh, double vehicle_length, double vehicle_width,
    double superelevation, double lon_cap, double clearance, locreq_triple* out);

/* Protection-level budget making all three coupled inequalities tight. */
LOCREQ_API locreq_status locreq_coupled_budget(const locreq_triple* alert_limits,
                                               double vehicle_length,
                                               double vehicle_width,
                                               double d_lambda, double d_phi,
                                               double d_theta, locreq_triple* out);

/* Lane-containment Monte Carlo on a straight (radius <= 0) or curved lane
 * with the given vehicle. */
LOCREQ_API locreq_status locreq_containment_rate(
    uint64_t trials, double sigma_lat, double sigma_lon, double sigma_heading,
    double lane_width, double radius, double vehicle_length,
    double vehicle_width, double lon_cap, uint64_t seed, unsigned workers,
    uint64_t* failures, double* ci_low, double* ci_high);

#ifdef __cplusplus
}
#endif

#endif /* LOCREQ_H */
