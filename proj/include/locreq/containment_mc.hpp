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

// Monte Carlo lane-containment check for the vehicle rectangle under
// Gaussian pose errors.

#include <cstdint>
#include <string>

#include "locreq/alert_limits.hpp"
#include "locreq/road_geometry.hpp"

namespace locreq::mc {

/// Offsets from the reference pose (the warning-box center). Positive
/// lateral offsets point toward the curve center; heading rotates the
/// rectangle about its own center.
struct PoseSample {
  double lateral_offset = 0.0;
  double longitudinal_offset = 0.0;
  double heading_error = 0.0;
};

/// Inclusive-boundary slack for containment comparisons, metres.
inline constexpr double kBoundaryTolerance = 1e-9;

/// Where the reference pose sits across the lane.
struct LanePlacement {
  road::LaneGeometry geometry;
  /// Distance of the reference pose from the curve center (curved lanes) or
  /// from the lane centerline (straight lanes, always 0).
  double reference = 0.0;

  /// Reference = inner lane edge + x/2, x the lateral extent of the warning
  /// box for `vehicle` with the given longitudinal cap. On straight lanes and
  /// whenever x reaches the lane width this is the centerline.
  static LanePlacement for_vehicle(const road::LaneGeometry& geometry,
                                   const alert::VehicleClass& vehicle,
                                   double lon_cap);
};

bool box_in_lane(const PoseSample& sample, const alert::VehicleClass& vehicle,
                 const LanePlacement& placement);

struct McConfig {
  std::uint64_t trials = 100000;
  double sigma_lat = 0.0;
  double sigma_lon = 0.0;
  double sigma_heading = 0.0;
  road::LaneGeometry geometry = road::LaneGeometry::straight(3.5);
  alert::VehicleClass vehicle = alert::reference_vehicle_class();
  double lon_cap = alert::kDefaultLongitudinalCap;
  std::uint64_t seed = 20210101;
  unsigned workers = 1;
  /// Negate lateral offsets and heading draws (mirror image of each pose).
  bool mirror = false;

  void validate() const;
};

struct WilsonInterval {
  double low;
  double high;
};

/// Wilson score interval for `failures` out of `trials` at multiplier z.
WilsonInterval wilson_interval(std::uint64_t failures, std::uint64_t trials,
                               double z);

/// Standard error implied by the Wilson interval: half-width / z.
double wilson_standard_error(std::uint64_t failures, std::uint64_t trials,
                             double z);

struct McResult {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Failure fraction with a 95% Wilson interval. Trial i runs on worker
/// i mod workers, each worker drawing from its own stream seeded by
/// (seed, worker); the failure count depends only on (seed, workers, trials).
McResult containment_rate(const McConfig& config);

/// Printed alongside every Monte Carlo report.
inline constexpr const char* kIntegrityCaveat =
    "integrity at 1e-9 is not empirically verifiable by desk-scale Monte "
    "Carlo; runs use inflated sigmas and rely on Gaussian scale invariance";

}  // namespace locreq::mc
