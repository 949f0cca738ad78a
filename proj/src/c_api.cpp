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

#include "locreq/locreq.h"

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "locreq/accuracy_budget.hpp"
#include "locreq/alert_limits.hpp"
#include "locreq/containment_mc.hpp"
#include "locreq/error.hpp"
#include "locreq/integrity_stats.hpp"
#include "locreq/report.hpp"
#include "locreq/road_geometry.hpp"
#include "locreq/run_config.hpp"
#include "locreq/safety_risk.hpp"
#include "locreq/text_io.hpp"

struct locreq_config {
  locreq::cli::RunConfig config;
};

struct locreq_run {
  std::vector<std::string> artifacts;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string last_error;

locreq_status to_status(locreq::ErrorCode code) {
  using locreq::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return LOCREQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::domain_error: return LOCREQ_ERR_DOMAIN;
    case ErrorCode::not_found: return LOCREQ_ERR_NOT_FOUND;
    case ErrorCode::invalid_tree: return LOCREQ_ERR_INVALID_TREE;
    case ErrorCode::infeasible_geometry: return LOCREQ_ERR_INFEASIBLE_GEOMETRY;
    case ErrorCode::infeasible_budget: return LOCREQ_ERR_INFEASIBLE_BUDGET;
    case ErrorCode::parse_error: return LOCREQ_ERR_PARSE;
    case ErrorCode::io_error: return LOCREQ_ERR_IO;
  }
  return LOCREQ_ERR_INTERNAL;
}

template <class F>
locreq_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return LOCREQ_OK;
  } catch (const locreq::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return LOCREQ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return LOCREQ_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr)
    locreq::fail(locreq::ErrorCode::invalid_argument,
                 std::string(name) + " must not be null");
}

locreq::stats::QuantileMode to_mode(locreq_quantile_mode mode) {
  return mode == LOCREQ_QUANTILE_PAPER ? locreq::stats::QuantileMode::paper
                                       : locreq::stats::QuantileMode::exact;
}

void copy_label(const std::string& label, char* buffer, std::size_t size) {
  if (buffer == nullptr || size == 0) return;
  const std::size_t n = std::min(label.size(), size - 1);
  std::memcpy(buffer, label.data(), n);
  buffer[n] = '\0';
}

}  // namespace

extern "C" {

const char* locreq_version(void) { return "1.0.0"; }

const char* locreq_status_string(locreq_status status) {
  switch (status) {
    case LOCREQ_OK: return "ok";
    case LOCREQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LOCREQ_ERR_DOMAIN: return "domain error";
    case LOCREQ_ERR_NOT_FOUND: return "not found";
    case LOCREQ_ERR_INVALID_TREE: return "invalid allocation tree";
    case LOCREQ_ERR_INFEASIBLE_GEOMETRY: return "infeasible geometry";
    case LOCREQ_ERR_INFEASIBLE_BUDGET: return "infeasible budget";
    case LOCREQ_ERR_PARSE: return "parse error";
    case LOCREQ_ERR_IO: return "i/o error";
    case LOCREQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* locreq_last_error(void) { return last_error.c_str(); }

locreq_status locreq_config_load(const char* path, locreq_config** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new locreq_config{locreq::cli::load_config(path)};
  });
}

locreq_status locreq_config_default(locreq_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new locreq_config{locreq::cli::default_config()};
  });
}

locreq_status locreq_config_set(locreq_config* config, const char* section,
                                const char* key, const char* value) {
  return guarded([&] {
    need(config, "config");
    need(section, "section");
    need(key, "key");
    need(value, "value");
    locreq::cli::apply_setting(config->config, section, key, value,
                               std::filesystem::current_path(), "override");
  });
}

locreq_status locreq_config_dump(const locreq_config* config, const char* path) {
  return guarded([&] {
    need(config, "config");
    need(path, "path");
    locreq::io::write_file_atomic(path, locreq::cli::dump_config(config->config));
  });
}

void locreq_config_free(locreq_config* config) { delete config; }

locreq_status locreq_run_command(const locreq_config* config, const char* command,
                                 const char* output_dir, locreq_run** out) {
  return guarded([&] {
    need(config, "config");
    need(command, "command");
    need(output_dir, "output_dir");
    need(out, "out");
    *out = nullptr;
    const auto outcome =
        locreq::cli::run_command(config->config, command, output_dir);
    auto* run = new locreq_run;
    for (const auto& p : outcome.artifacts) run->artifacts.push_back(p.string());
    run->warnings = outcome.warnings;
    *out = run;
  });
}

size_t locreq_run_artifact_count(const locreq_run* run) {
  return run ? run->artifacts.size() : 0;
}

const char* locreq_run_artifact(const locreq_run* run, size_t index) {
  if (!run || index >= run->artifacts.size()) return nullptr;
  return run->artifacts[index].c_str();
}

size_t locreq_run_warning_count(const locreq_run* run) {
  return run ? run->warnings.size() : 0;
}

const char* locreq_run_warning(const locreq_run* run, size_t index) {
  if (!run || index >= run->warnings.size()) return nullptr;
  return run->warnings[index].c_str();
}

void locreq_run_free(locreq_run* run) { delete run; }

locreq_status locreq_total_integrity_budget(double tls, double p_fi, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::risk::total_integrity_budget({tls, p_fi});
  });
}

locreq_status locreq_vehicle_failure_rate(double crashes, double total_miles,
                                          double fleet_size, double km_per_vehicle,
                                          double km_to_mile,
                                          double attribution_fraction,
                                          double* out) {
  return guarded([&] {
    need(out, "out");
    locreq::risk::CrashStatistics stats;
    stats.crashes = crashes;
    stats.attribution_fraction = attribution_fraction;
    if (total_miles >= 0.0) {
      stats.total_miles = total_miles;
    } else {
      stats.fleet_size = fleet_size;
      stats.km_per_vehicle = km_per_vehicle;
    }
    *out = locreq::risk::vehicle_failure_rate(stats, km_to_mile);
  });
}

locreq_status locreq_safety_level(double rate_per_hour, int* below_scale,
                                  char* iso_label, char* dal_label,
                                  size_t label_size) {
  return guarded([&] {
    need(below_scale, "below_scale");
    const auto level = locreq::risk::safety_level_lookup(
        rate_per_hour, locreq::risk::default_safety_bands());
    *below_scale = level.below_scale ? 1 : 0;
    copy_label(level.band ? level.band->iso_label : "", iso_label, label_size);
    copy_label(level.band ? level.band->dal_label : "", dal_label, label_size);
  });
}

locreq_status locreq_standard_normal_cdf(double z, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::stats::standard_normal_cdf(z);
  });
}

locreq_status locreq_two_sided_sigma(double confidence, locreq_quantile_mode mode,
                                     double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::stats::two_sided_sigma(confidence, to_mode(mode));
  });
}

locreq_status locreq_confidence_ratio(double high, double low,
                                      locreq_quantile_mode mode, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::stats::confidence_ratio(high, low, to_mode(mode));
  });
}

locreq_status locreq_superelevation_radius(double speed_kmh,
                                           double lateral_friction,
                                           double superelevation, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::road::superelevation_radius(speed_kmh, lateral_friction,
                                               superelevation);
  });
}

locreq_status locreq_curve_longitudinal_extent(double x, double lane_width,
                                               double radius, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::road::curve_longitudinal_extent(
        x, locreq::road::LaneGeometry::curved(lane_width, radius));
  });
}

locreq_status locreq_curve_lateral_extent(double y, double lane_width,
                                          double radius, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = locreq::road::curve_lateral_extent(
        y, locreq::road::LaneGeometry::curved(lane_width, radius));
  });
}

locreq_status locreq_solve_scenario(double speed_kmh, double vehicle_length,
                                    double vehicle_width, double superelevation,
                                    double lon_cap, double clearance,
                                    locreq_triple* out) {
  return guarded([&] {
    need(out, "out");
    const locreq::alert::VehicleClass vehicle{"custom", vehicle_length,
                                              vehicle_width};
    const auto result = locreq::alert::solve_scenario(
        {speed_kmh, superelevation, lon_cap, clearance}, vehicle,
        locreq::road::RoadStandards::national_default());
    *out = {result.limits.lateral, result.limits.longitudinal,
            result.limits.vertical};
  });
}

locreq_status locreq_coupled_budget(const locreq_triple* alert_limits,
                                    double vehicle_length, double vehicle_width,
                                    double d_lambda, double d_phi, double d_theta,
                                    locreq_triple* out) {
  return guarded([&] {
    need(alert_limits, "alert_limits");
    need(out, "out");
    const auto e = locreq::budget::coupled_budget(
        {alert_limits->lateral, alert_limits->longitudinal, alert_limits->vertical},
        {"custom", vehicle_length, vehicle_width}, {d_lambda, d_phi, d_theta});
    *out = {e.lateral, e.longitudinal, e.vertical};
  });
}

locreq_status locreq_containment_rate(uint64_t trials, double sigma_lat,
                                      double sigma_lon, double sigma_heading,
                                      double lane_width, double radius,
                                      double vehicle_length, double vehicle_width,
                                      double lon_cap, uint64_t seed,
                                      unsigned workers, uint64_t* failures,
                                      double* ci_low, double* ci_high) {
  return guarded([&] {
    need(failures, "failures");
    locreq::mc::McConfig cfg;
    cfg.trials = trials;
    cfg.sigma_lat = sigma_lat;
    cfg.sigma_lon = sigma_lon;
    cfg.sigma_heading = sigma_heading;
    cfg.geometry = radius > 0.0
                       ? locreq::road::LaneGeometry::curved(lane_width, radius)
                       : locreq::road::LaneGeometry::straight(lane_width);
    cfg.vehicle = {"custom", vehicle_length, vehicle_width};
    cfg.lon_cap = lon_cap;
    cfg.seed = seed;
    cfg.workers = workers;
    const auto result = locreq::mc::containment_rate(cfg);
    *failures = result.failures;
    if (ci_low) *ci_low = result.ci_low;
    if (ci_high) *ci_high = result.ci_high;
  });
}

}  // extern "C"
