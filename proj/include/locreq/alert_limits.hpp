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

// Lateral, longitudinal and vertical alert limits from lane geometry and
// vehicle dimensions.

#include <optional>
#include <string>
#include <vector>

#include "locreq/road_geometry.hpp"

namespace locreq::alert {

struct VehicleClass {
  std::string label;
  double length_m = 0.0;
  double width_m = 0.0;

  void validate() const;
};

/// Largest length/width of each national size class (A00 .. D).
std::vector<VehicleClass> default_vehicle_classes();

/// The 4.7 m x 1.8 m mid-size sedan used for the alert-limit table.
VehicleClass reference_vehicle_class();

struct AlertLimits {
  double lateral = 0.0;
  double longitudinal = 0.0;
  double vertical = 0.0;
};

struct BoundingBoxExtents {
  double x = 0.0;  // lateral
  double y = 0.0;  // longitudinal
};

inline constexpr double kDefaultLongitudinalCap = 1.5;
inline constexpr double kDefaultClearance = 4.5;   // grade III/IV roads
inline constexpr double kHighwayClearance = 5.0;  // expressway, grade I/II

double lateral_alert_limit(double x, const VehicleClass& vehicle);
double longitudinal_alert_limit(double y, const VehicleClass& vehicle);

/// min(l_v / 2, hard_cap).
double longitudinal_cap(const VehicleClass& vehicle,
                        double hard_cap = kDefaultLongitudinalCap);

/// One third of the minimum vertical separation between stacked roads.
double vertical_alert_limit(double min_clearance);

struct ScenarioInputs {
  double design_speed_kmh = 60.0;
  double superelevation = 0.08;
  double lon_cap = kDefaultLongitudinalCap;
  double clearance = kDefaultClearance;
};

struct ScenarioResult {
  AlertLimits limits;
  BoundingBoxExtents box;
  double lane_width = 0.0;
  double radius = 0.0;
  bool clamped_to_lane = false;      // curved-lane x exceeded w
  bool approximation_valid = true;   // r >= 10 w
};

/// Warning-box solution for one design speed: y = l_v + 2 cap, x from the
/// curved-lane relation clamped to the lane width.
ScenarioResult solve_scenario(const ScenarioInputs& inputs,
                              const VehicleClass& vehicle,
                              const road::RoadStandards& standards);

/// Lane geometry of a tabulated design speed at one superelevation column.
/// Throws not_found for a dash cell.
road::LaneGeometry scenario_geometry(const road::RoadStandards& standards,
                                     double design_speed_kmh,
                                     double superelevation);

struct CurvePoint {
  double x;  // lateral box extent
  double y;  // longitudinal box extent
  double lateral_al;
  double longitudinal_al;
};

/// Box extent curve y(x) sampled uniformly over x in (0, w].
std::vector<CurvePoint> extent_curve(const road::LaneGeometry& geom,
                                     std::size_t samples);

/// Lateral/longitudinal alert-limit pairs over x in [w_v, min(w, x_max)],
/// where x_max is the lateral extent at which the longitudinal limit reaches
/// zero. When `mark_longitudinal` is set, the exact point on the curve with
/// that longitudinal limit is inserted (in order) if it lies in range.
std::vector<CurvePoint> tradeoff_curve(
    const road::LaneGeometry& geom, const VehicleClass& vehicle,
    std::size_t samples, std::optional<double> mark_longitudinal = std::nullopt);

}  // namespace locreq::alert
