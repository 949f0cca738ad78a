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

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace locreq::road {

/// Maximum-superelevation columns of the design-standard table, in column
/// order.
inline constexpr std::array<double, 4> kSuperelevationColumns{0.10, 0.08, 0.06,
                                                              0.04};

/// Index of `superelevation` in kSuperelevationColumns, or nullopt.
std::optional<std::size_t> superelevation_column(double superelevation);

struct RoadStandardRow {
  double design_speed_kmh = 0.0;
  double lane_width_m = 0.0;
  /// Minimum circular-curve radius per column; nullopt for a dash cell.
  std::array<std::optional<double>, 4> min_radius_m{};

  /// Throws invalid_argument for a superelevation outside the columns.
  std::optional<double> radius_at(double superelevation) const;
};

class RoadStandards {
 public:
  RoadStandards() = default;
  explicit RoadStandards(std::vector<RoadStandardRow> rows);

  /// Exact match only; throws not_found listing the tabulated speeds.
  const RoadStandardRow& row(double design_speed_kmh) const;

  const std::vector<RoadStandardRow>& rows() const noexcept { return rows_; }

  /// Highway lane widths and minimum radii for 120..20 km/h.
  static RoadStandards national_default();

 private:
  std::vector<RoadStandardRow> rows_;
};

/// Checks lane widths and the radius ordering invariants (radii decrease with
/// superelevation and increase with design speed).
void validate(const RoadStandards& standards);

struct SuperelevationPolicy {
  std::string region;
  /// Permitted maximum superelevations; the first entry is the usual choice.
  std::vector<double> max_superelevation;
};

std::vector<SuperelevationPolicy> default_superelevation_policies();

/// r = v^2 / (127 (u + i)), v in km/h, result in metres.
double superelevation_radius(double speed_kmh, double lateral_friction,
                             double superelevation);

enum class LaneKind { straight, curved };

class LaneGeometry {
 public:
  static LaneGeometry straight(double lane_width);
  /// Requires r > w. The r ~ r' substitution is only tight for r >= 10 w;
  /// see approximation_valid().
  static LaneGeometry curved(double lane_width, double centerline_radius);

  LaneKind kind() const noexcept { return kind_; }
  double lane_width() const noexcept { return width_; }
  /// Centerline radius; throws for straight lanes.
  double radius() const;
  bool is_curved() const noexcept { return kind_ == LaneKind::curved; }

  bool approximation_valid() const noexcept {
    return kind_ == LaneKind::straight || radius_ >= 10.0 * width_;
  }

 private:
  LaneGeometry(LaneKind kind, double width, double radius)
      : kind_(kind), width_(width), radius_(radius) {}

  LaneKind kind_;
  double width_;
  double radius_;
};

/// Longitudinal extent y of a chord box of lateral extent x that just fits a
/// curved lane: y = 2 sqrt((r + w/2)^2 - (x + r - w/2)^2), x in (0, w].
double curve_longitudinal_extent(double x, const LaneGeometry& geom);

struct LateralExtent {
  double x;
  bool clamped;  // the curved-lane value exceeded the lane width
};

/// Inverse of curve_longitudinal_extent, clamped to the lane width. Throws
/// infeasible_geometry when y leaves no positive x (y >= 2 sqrt(2 r w)).
LateralExtent curve_lateral_extent_detail(double y, const LaneGeometry& geom);

inline double curve_lateral_extent(double y, const LaneGeometry& geom) {
  return curve_lateral_extent_detail(y, geom).x;
}

}  // namespace locreq::road
