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

#include "locreq/containment_mc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "locreq/error.hpp"
#include "locreq/integrity_stats.hpp"

namespace locreq::mc {

namespace {

struct Point {
  double x;  // along the lane
  double y;  // across the lane; radial for curved lanes
};

std::array<Point, 4> corners(const PoseSample& s,
                             const alert::VehicleClass& vehicle,
                             double center_y) {
  const double c = std::cos(s.heading_error);
  const double sn = std::sin(s.heading_error);
  const double hl = vehicle.length_m / 2.0;
  const double hw = vehicle.width_m / 2.0;
  const Point center{s.longitudinal_offset, center_y};
  std::array<Point, 4> out{};
  const double signs[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
  for (int i = 0; i < 4; ++i) {
    const double a = signs[i][0] * hl;
    const double b = signs[i][1] * hw;
    out[i] = {center.x + a * c - b * sn, center.y + a * sn + b * c};
  }
  return out;
}

double segment_distance_to_origin(Point p, Point q) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? -(p.x * dx + p.y * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x + t * dx, p.y + t * dy);
}

// Distance from the origin to a convex quadrilateral (0 if it contains it).
double distance_to_origin(const std::array<Point, 4>& quad) {
  bool inside = true;
  double sign = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Point p = quad[i];
    const Point q = quad[(i + 1) % 4];
    const double cross = (q.x - p.x) * (-p.y) - (q.y - p.y) * (-p.x);
    if (cross != 0.0) {
      if (sign == 0.0) sign = cross;
      if ((cross > 0.0) != (sign > 0.0)) inside = false;
    }
  }
  if (inside) return 0.0;
  double best = segment_distance_to_origin(quad[0], quad[1]);
  for (int i = 1; i < 4; ++i)
    best = std::min(best, segment_distance_to_origin(quad[i], quad[(i + 1) % 4]));
  return best;
}

}  // namespace

LanePlacement LanePlacement::for_vehicle(const road::LaneGeometry& geometry,
                                         const alert::VehicleClass& vehicle,
                                         double lon_cap) {
  vehicle.validate();
  if (!geometry.is_curved()) return {geometry, 0.0};
  require(lon_cap >= 0.0, ErrorCode::invalid_argument,
          "longitudinal cap must be >= 0");
  const double w = geometry.lane_width();
  const double r = geometry.radius();
  const double half_length =
      lon_cap > 0.0 ? alert::longitudinal_cap(vehicle, lon_cap) : 0.0;
  const double y = vehicle.length_m + 2.0 * half_length;
  require(y <= 2.0 * (r + w / 2.0), ErrorCode::infeasible_geometry,
          "warning box is longer than the curve admits");
  const double x = road::curve_lateral_extent(y, geometry);
  return {geometry, r - w / 2.0 + x / 2.0};
}

bool box_in_lane(const PoseSample& sample, const alert::VehicleClass& vehicle,
                 const LanePlacement& placement) {
  const auto& geom = placement.geometry;
  const double half_w = geom.lane_width() / 2.0;

  if (!geom.is_curved()) {
    const auto quad = corners(sample, vehicle, placement.reference -
                                                   sample.lateral_offset);
    for (const auto& p : quad) {
      if (std::abs(p.y) > half_w + kBoundaryTolerance) return false;
    }
    return true;
  }

  // Curve center at the origin, reference pose on the positive y axis.
  const double r = geom.radius();
  const auto quad =
      corners(sample, vehicle, placement.reference - sample.lateral_offset);
  const double outer = r + half_w;
  for (const auto& p : quad) {
    if (std::hypot(p.x, p.y) > outer + kBoundaryTolerance) return false;
  }
  return distance_to_origin(quad) >= r - half_w - kBoundaryTolerance;
}

void McConfig::validate() const {
  require(trials >= 1, ErrorCode::invalid_argument, "trials must be >= 1");
  require(sigma_lat >= 0.0 && sigma_lon >= 0.0 && sigma_heading >= 0.0,
          ErrorCode::invalid_argument, "sigmas must be >= 0");
  require(workers >= 1, ErrorCode::invalid_argument, "workers must be >= 1");
  vehicle.validate();
}

WilsonInterval wilson_interval(std::uint64_t failures, std::uint64_t trials,
                               double z) {
  require(trials > 0 && failures <= trials, ErrorCode::invalid_argument,
          "wilson_interval: need 0 <= failures <= trials, trials > 0");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double wilson_standard_error(std::uint64_t failures, std::uint64_t trials,
                             double z) {
  const auto ci = wilson_interval(failures, trials, z);
  return (ci.high - ci.low) / (2.0 * z);
}

McResult containment_rate(const McConfig& config) {
  config.validate();
  const auto placement =
      LanePlacement::for_vehicle(config.geometry, config.vehicle, config.lon_cap);
  const unsigned workers = config.workers;
  std::vector<std::uint64_t> failures(workers, 0);

  auto run_worker = [&](unsigned worker) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(worker)};
    std::mt19937_64 engine(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double flip = config.mirror ? -1.0 : 1.0;
    std::uint64_t count = 0;
    for (std::uint64_t i = worker; i < config.trials; i += workers) {
      // All three draws happen even for a zero sigma.
      const double lat = normal(engine);
      const double lon = normal(engine);
      const double head = normal(engine);
      const PoseSample sample{flip * config.sigma_lat * lat,
                              config.sigma_lon * lon,
                              flip * config.sigma_heading * head};
      if (!box_in_lane(sample, config.vehicle, placement)) ++count;
    }
    failures[worker] = count;
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
  }

  McResult result;
  result.trials = config.trials;
  for (auto f : failures) result.failures += f;
  result.rate =
      static_cast<double>(result.failures) / static_cast<double>(config.trials);
  const auto ci = wilson_interval(result.failures, result.trials,
                                  stats::two_sided_sigma(0.95));
  result.ci_low = ci.low;
  result.ci_high = ci.high;
  result.seed = config.seed;
  result.workers = workers;
  return result;
}

}  // namespace locreq::mc
