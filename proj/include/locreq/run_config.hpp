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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "locreq/accuracy_budget.hpp"
#include "locreq/integrity_stats.hpp"
#include "locreq/safety_risk.hpp"

namespace locreq::cli {

/// Effective settings of one pipeline run. Loaded from a sectioned key-value
/// file; relative paths resolve against the file's directory.
struct RunConfig {
  std::filesystem::path source;

  // [inputs]
  std::filesystem::path standards_path;
  std::filesystem::path vehicles_path;
  std::filesystem::path crash_stats_path;
  std::filesystem::path superelevation_path;
  std::string reference_vehicle = "reference";

  // [scenario]
  double design_speed_kmh = 60.0;
  double superelevation = 0.08;
  double lon_cap = 1.5;
  double clearance = 4.5;
  std::vector<double> fig4_speeds{60.0, 80.0};
  std::size_t curve_samples = 512;

  // [accuracy]
  stats::QuantileMode quantile_mode = stats::QuantileMode::paper;
  budget::AttitudeErrors attitude{0.03, 0.03, 0.03};
  double angle_95 = 0.02;
  budget::CouplingForm coupling = budget::CouplingForm::verbatim;
  budget::LateralAlSource lateral_source =
      budget::LateralAlSource::reference_vehicle;
  /// Vehicle labels for the accuracy table; empty means every vehicle except
  /// the reference one.
  std::vector<std::string> accuracy_classes;

  // [risk] and [tree]
  std::string crash_label;
  risk::SafetyTarget target{2e-10, 1e-2};
  double km_to_mile = risk::kRoundedKmToMile;
  risk::AllocationNode tree{"total", 1.0, {}, {}};
  std::string tree_origin;  // file the tree came from, for messages

  // [mc]
  std::uint64_t mc_trials = 100000;
  double mc_sigma_lat = 0.25;
  double mc_sigma_lon = 0.5;
  double mc_sigma_heading = 0.01;
  bool mc_curved = true;
  std::uint64_t mc_seed = 20210101;
  unsigned mc_workers = 4;

  // [output]
  bool paper_rounding = false;
  bool svg = true;
};

/// Applies one setting; `base_dir` anchors relative paths. Unknown keys and
/// malformed values throw parse_error prefixed with `where`.
void apply_setting(RunConfig& config, std::string_view section,
                   std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir,
                   const std::string& where);

RunConfig load_config(const std::filesystem::path& path);

/// The bundled China configuration.
RunConfig default_config();

/// Bundled data directory (configs, tables, trees).
std::filesystem::path data_dir();

/// Serializes every effective setting, the tree inline, paths absolute.
/// Reloading the text reproduces the same run.
std::string dump_config(const RunConfig& config);

/// Reads the [tree] section of a tree file; the root is named "total".
/// Keys are dotted child paths, values weights (decimal or "a/b").
risk::AllocationNode tree_from_ini_file(const std::filesystem::path& path);

}  // namespace locreq::cli
