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

// Crash statistics to per-mile failure rates, the target-level-of-safety
// relation, budget allocation over the virtual driver system tree, and the
// per-hour safety-level bands.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locreq::risk {

/// Rounded km-to-mile factor.
inline constexpr double kRoundedKmToMile = 0.621;
inline constexpr double kExactKmToMile = 0.621371192237334;

struct CrashStatistics {
  std::string label;
  double crashes = 0.0;
  std::optional<double> fatal_crashes;
  std::optional<double> fatalities;
  std::optional<double> total_miles;
  std::optional<double> fleet_size;
  std::optional<double> km_per_vehicle;
  double attribution_fraction = 0.0;

  void validate() const;
};

struct SafetyTarget {
  double tls = 0.0;   // fatal accidents per mile
  double p_fi = 0.0;  // fatal crashes per crash

  void validate() const;
};

double fleet_miles(double fleet_size, double km_per_vehicle,
                   double km_to_mile = kRoundedKmToMile);

/// Miles driven per year: `total_miles` when present, otherwise the fleet
/// product.
double resolve_miles(const CrashStatistics& stats,
                     double km_to_mile = kRoundedKmToMile);

double vehicle_failure_rate(const CrashStatistics& stats,
                            double km_to_mile = kRoundedKmToMile);

double fatality_ratio(double fatalities, double fatal_crashes);

/// Allowed P_veh + P_vds for a target: tls / p_fi.
double total_integrity_budget(const SafetyTarget& target);

/// Inverse reading: the TLS implied when a measured vehicle rate is taken as
/// the whole budget (p_fi * rate).
double tls_from_measured(double measured_rate, double p_fi);

struct AllocationNode {
  std::string name;
  double weight = 1.0;
  std::vector<AllocationNode> children;
  std::optional<double> resolved_budget;

  bool is_leaf() const noexcept { return children.empty(); }
};

inline constexpr double kWeightSumTolerance = 1e-12;

/// Throws ErrorCode::invalid_tree when any internal node's child weights do
/// not sum to one, a weight is negative, or sibling names collide.
void validate_tree(const AllocationNode& tree);

AllocationNode allocate_budget(AllocationNode tree, double root_budget);

/// Dotted path lookup relative to the root, e.g. "vds.planning.localization".
/// The root itself is addressed by its own name or the empty path.
const AllocationNode* find_node(const AllocationNode& tree,
                                std::string_view path);

struct FlatNode {
  std::string path;
  const AllocationNode* node;
};

/// Pre-order walk; paths are dotted and start with the root name.
std::vector<FlatNode> flatten(const AllocationNode& tree);

double sum_of_leaf_budgets(const AllocationNode& tree);

struct SafetyLevelBand {
  double lower;  // exclusive, events per hour
  double upper;  // inclusive; +inf for the quality-managed row
  std::string iec_label;
  std::string iso_label;
  std::string dal_label;
  std::string cenelec_label;
};

/// Bands ordered from most to least stringent (ascending rates).
const std::vector<SafetyLevelBand>& default_safety_bands();

struct SafetyLevel {
  bool below_scale = false;
  /// Index into the band list; meaningless when below_scale.
  std::size_t band_index = 0;
  const SafetyLevelBand* band = nullptr;
};

SafetyLevel safety_level_lookup(double rate_per_hour,
                                const std::vector<SafetyLevelBand>& bands);

void validate_bands(const std::vector<SafetyLevelBand>& bands);

}  // namespace locreq::risk
