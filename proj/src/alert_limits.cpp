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

#include "locreq/alert_limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locreq/error.hpp"

namespace locreq::alert {

void VehicleClass::validate() const {
  require(std::isfinite(length_m) && std::isfinite(width_m) && width_m > 0.0 &&
              width_m < length_m,
          ErrorCode::invalid_argument,
          "vehicle '" + label + "' needs 0 < width < length");
}

std::vector<VehicleClass> default_vehicle_classes() {
  return {
      {"A00", 3.7, 1.675}, {"A0", 4.4, 1.75}, {"A", 4.7, 1.825},
      {"B", 5.0, 1.9},     {"C", 5.1, 1.94},  {"D", 5.3, 1.975},
  };
}

VehicleClass reference_vehicle_class() { return {"reference", 4.7, 1.8}; }

double lateral_alert_limit(double x, const VehicleClass& vehicle) {
  vehicle.validate();
  if (x < vehicle.width_m) {
    std::ostringstream msg;
    msg << "box lateral extent " << x << " m is narrower than vehicle '"
        << vehicle.label << "' (" << vehicle.width_m << " m)";
    fail(ErrorCode::infeasible_geometry, msg.str());
  }
  return (x - vehicle.width_m) / 2.0;
}

double longitudinal_alert_limit(double y, const VehicleClass& vehicle) {
  vehicle.validate();
  if (y < vehicle.length_m) {
    std::ostringstream msg;
    msg << "box longitudinal extent " << y << " m is shorter than vehicle '"
        << vehicle.label << "' (" << vehicle.length_m << " m)";
    fail(ErrorCode::infeasible_geometry, msg.str());
  }
  return (y - vehicle.length_m) / 2.0;
}

double longitudinal_cap(const VehicleClass& vehicle, double hard_cap) {
  vehicle.validate();
  require(hard_cap > 0.0, ErrorCode::invalid_argument,
          "longitudinal cap must be > 0");
  return std::min(vehicle.length_m / 2.0, hard_cap);
}

double vertical_alert_limit(double min_clearance) {
  require(min_clearance > 0.0, ErrorCode::invalid_argument,
          "vertical clearance must be > 0");
  return min_clearance / 3.0;
}

road::LaneGeometry scenario_geometry(const road::RoadStandards& standards,
                                     double design_speed_kmh,
                                     double superelevation) {
  const auto& row = standards.row(design_speed_kmh);
  const auto radius = row.radius_at(superelevation);
  if (!radius) {
    std::ostringstream msg;
    msg << "no minimum radius for " << design_speed_kmh << " km/h at "
        << superelevation * 100.0 << "% superelevation";
    fail(ErrorCode::not_found, msg.str());
  }
  return road::LaneGeometry::curved(row.lane_width_m, *radius);
}

ScenarioResult solve_scenario(const ScenarioInputs& inputs,
                              const VehicleClass& vehicle,
                              const road::RoadStandards& standards) {
  const auto geom = scenario_geometry(standards, inputs.design_speed_kmh,
                                      inputs.superelevation);
  const double lon_al = longitudinal_cap(vehicle, inputs.lon_cap);
  const double y = vehicle.length_m + 2.0 * lon_al;
  const auto lateral = road::curve_lateral_extent_detail(y, geom);

  ScenarioResult result;
  result.lane_width = geom.lane_width();
  result.radius = geom.radius();
  result.clamped_to_lane = lateral.clamped;
  result.approximation_valid = geom.approximation_valid();
  result.box = {lateral.x, y};
  result.limits.lateral = lateral_alert_limit(lateral.x, vehicle);
  result.limits.longitudinal = lon_al;
  result.limits.vertical = vertical_alert_limit(inputs.clearance);
  return result;
}

std::vector<CurvePoint> extent_curve(const road::LaneGeometry& geom,
                                     std::size_t samples) {
  require(samples >= 2, ErrorCode::invalid_argument,
          "curve needs at least 2 samples");
  const double w = geom.lane_width();
  std::vector<CurvePoint> points;
  points.reserve(samples);
  for (std::size_t k = 1; k <= samples; ++k) {
    const double x = w * static_cast<double>(k) / static_cast<double>(samples);
    const double y = road::curve_longitudinal_extent(x, geom);
    points.push_back({x, y, 0.0, 0.0});
  }
  return points;
}

std::vector<CurvePoint> tradeoff_curve(const road::LaneGeometry& geom,
                                       const VehicleClass& vehicle,
                                       std::size_t samples,
                                       std::optional<double> mark_longitudinal) {
  require(samples >= 2, ErrorCode::invalid_argument,
          "curve needs at least 2 samples");
  vehicle.validate();
  const double w = geom.lane_width();
  const double x_max =
      std::min(w, road::curve_lateral_extent(vehicle.length_m, geom));
  if (!(x_max > vehicle.width_m)) {
    std::ostringstream msg;
    msg << "vehicle '" << vehicle.label
        << "' leaves no feasible lateral range in this lane";
    fail(ErrorCode::infeasible_geometry, msg.str());
  }

  auto point_at = [&](double x) {
    const double y = road::curve_longitudinal_extent(x, geom);
    // At the upper end y can undershoot l_v by rounding.
    const double lon = std::max(0.0, (y - vehicle.length_m) / 2.0);
    return CurvePoint{x, y, (x - vehicle.width_m) / 2.0, lon};
  };

  std::vector<CurvePoint> points;
  points.reserve(samples + 1);
  const double span = x_max - vehicle.width_m;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
    points.push_back(point_at(k + 1 == samples ? x_max : vehicle.width_m + span * t));
  }

  if (mark_longitudinal) {
    const double y = vehicle.length_m + 2.0 * *mark_longitudinal;
    const double outer = geom.radius() + w / 2.0;
    if (*mark_longitudinal >= 0.0 && y <= 2.0 * outer) {
      const double x = road::curve_lateral_extent(y, geom);
      if (x >= vehicle.width_m && x <= x_max) {
        const CurvePoint marked{x, y, (x - vehicle.width_m) / 2.0,
                                *mark_longitudinal};
        auto it = std::lower_bound(
            points.begin(), points.end(), x,
            [](const CurvePoint& p, double value) { return p.x < value; });
        if (it == points.end() || it->x != x) points.insert(it, marked);
      }
    }
  }
  return points;
}

}  // namespace locreq::alert
