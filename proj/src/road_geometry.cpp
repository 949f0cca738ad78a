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

#include "locreq/road_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locreq/error.hpp"

namespace locreq::road {

std::optional<std::size_t> superelevation_column(double superelevation) {
  for (std::size_t i = 0; i < kSuperelevationColumns.size(); ++i) {
    if (std::abs(kSuperelevationColumns[i] - superelevation) < 1e-12) return i;
  }
  return std::nullopt;
}

std::optional<double> RoadStandardRow::radius_at(double superelevation) const {
  const auto col = superelevation_column(superelevation);
  if (!col) {
    std::ostringstream msg;
    msg << "superelevation " << superelevation
        << " is not one of 0.10, 0.08, 0.06, 0.04";
    fail(ErrorCode::invalid_argument, msg.str());
  }
  return min_radius_m[*col];
}

RoadStandards::RoadStandards(std::vector<RoadStandardRow> rows)
    : rows_(std::move(rows)) {}

const RoadStandardRow& RoadStandards::row(double design_speed_kmh) const {
  for (const auto& r : rows_) {
    if (r.design_speed_kmh == design_speed_kmh) return r;
  }
  std::ostringstream msg;
  msg << "no design standard for " << design_speed_kmh
      << " km/h; tabulated speeds:";
  for (const auto& r : rows_) msg << ' ' << r.design_speed_kmh;
  fail(ErrorCode::not_found, msg.str());
}

RoadStandards RoadStandards::national_default() {
  using R = std::optional<double>;
  const R dash;
  return RoadStandards({
      {120, 3.75, {R(570), R(650), R(710), R(810)}},
      {100, 3.75, {R(360), R(400), R(440), R(500)}},
      {80, 3.75, {R(220), R(250), R(270), R(300)}},
      {60, 3.5, {R(115), R(125), R(135), R(150)}},
      {40, 3.5, {dash, R(60), R(60), R(65)}},
      {30, 3.25, {dash, R(30), R(35), R(40)}},
      {20, 3.0, {dash, R(15), R(15), R(20)}},
  });
}

void validate(const RoadStandards& standards) {
  const auto& rows = standards.rows();
  require(!rows.empty(), ErrorCode::invalid_argument, "road standards are empty");
  for (const auto& row : rows) {
    std::ostringstream where;
    where << "design speed " << row.design_speed_kmh << " km/h: ";
    require(row.design_speed_kmh > 0.0, ErrorCode::invalid_argument,
            where.str() + "speed must be > 0");
    require(row.lane_width_m > 0.0, ErrorCode::invalid_argument,
            where.str() + "lane width must be > 0");
    std::optional<double> previous;
    for (const auto& radius : row.min_radius_m) {
      if (!radius) continue;
      require(*radius > 0.0, ErrorCode::invalid_argument,
              where.str() + "radius must be > 0");
      require(!previous || *previous <= *radius, ErrorCode::invalid_argument,
              where.str() + "radius must not grow with superelevation");
      previous = radius;
    }
  }
  for (std::size_t col = 0; col < kSuperelevationColumns.size(); ++col) {
    for (const auto& a : rows) {
      for (const auto& b : rows) {
        if (a.design_speed_kmh < b.design_speed_kmh && a.min_radius_m[col] &&
            b.min_radius_m[col]) {
          require(*a.min_radius_m[col] <= *b.min_radius_m[col],
                  ErrorCode::invalid_argument,
                  "minimum radius must not shrink as design speed grows");
        }
      }
    }
  }
}

std::vector<SuperelevationPolicy> default_superelevation_policies() {
  return {
      {"general", {0.08}},
      {"snow-and-ice", {0.06}},
      {"passenger-expressway", {0.08, 0.10}},
      {"urban", {0.04, 0.08}},
  };
}

double superelevation_radius(double speed_kmh, double lateral_friction,
                             double superelevation) {
  require(speed_kmh > 0.0, ErrorCode::invalid_argument,
          "superelevation_radius: speed must be > 0");
  const double denom = lateral_friction + superelevation;
  require(denom > 0.0, ErrorCode::domain_error,
          "superelevation_radius: u + i must be > 0");
  return speed_kmh * speed_kmh / (127.0 * denom);
}

LaneGeometry LaneGeometry::straight(double lane_width) {
  require(std::isfinite(lane_width) && lane_width > 0.0,
          ErrorCode::invalid_argument, "lane width must be > 0");
  return LaneGeometry(LaneKind::straight, lane_width, 0.0);
}

LaneGeometry LaneGeometry::curved(double lane_width, double centerline_radius) {
  require(std::isfinite(lane_width) && lane_width > 0.0,
          ErrorCode::invalid_argument, "lane width must be > 0");
  require(std::isfinite(centerline_radius) && centerline_radius > lane_width,
          ErrorCode::invalid_argument,
          "curve radius must exceed the lane width");
  return LaneGeometry(LaneKind::curved, lane_width, centerline_radius);
}

double LaneGeometry::radius() const {
  require(is_curved(), ErrorCode::invalid_argument,
          "straight lanes have no curve radius");
  return radius_;
}

double curve_longitudinal_extent(double x, const LaneGeometry& geom) {
  const double w = geom.lane_width();
  const double r = geom.radius();
  require(x > 0.0 && x <= w, ErrorCode::invalid_argument,
          "curve_longitudinal_extent: x must lie in (0, w]");
  // (outer - inner)(outer + inner), outer - inner = w - x, outer + inner = 2r + x.
  const double radicand = (w - x) * (2.0 * r + x);
  return 2.0 * std::sqrt(std::max(radicand, 0.0));
}

LateralExtent curve_lateral_extent_detail(double y, const LaneGeometry& geom) {
  const double w = geom.lane_width();
  const double r = geom.radius();
  const double outer = r + w / 2.0;
  require(y >= 0.0 && y <= 2.0 * outer, ErrorCode::invalid_argument,
          "curve_lateral_extent: y must lie in [0, 2(r + w/2)]");
  const double half = y / 2.0;
  // x = sqrt(outer^2 - half^2) - (r - w/2) written as w minus a gap.
  const double chord = std::sqrt((outer - half) * (outer + half));
  const double x = w - half * half / (chord + outer);
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "a box " << y << " m long does not fit in a " << w
        << " m lane of radius " << r << " m";
    fail(ErrorCode::infeasible_geometry, msg.str());
  }
  if (x > w) return {w, true};
  return {x, false};
}

}  // namespace locreq::road
