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

#include <cmath>

#include "doctest.h"
#include "locreq/error.hpp"
#include "locreq/road_geometry.hpp"
#include "oracles.hpp"

using namespace locreq;
using namespace locreq::road;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST_SUITE("road_geometry") {

TEST_CASE("radius from speed, friction and superelevation") {
  const double r = superelevation_radius(60, 0.15, 0.08);
  CHECK(r == doctest::Approx(3600.0 / (127.0 * 0.23)).epsilon(1e-15));
  CHECK(r == doctest::Approx(123.25).epsilon(1e-4));
  CHECK(superelevation_radius(120, 0.15, 0.08) ==
        doctest::Approx(4.0 * r).epsilon(1e-15));
  CHECK(superelevation_radius(60, 0.1468, 0.08) == doctest::Approx(125.0).epsilon(0.004));
  CHECK(code_of([] { superelevation_radius(60, -0.1, 0.08); }) == ErrorCode::domain_error);
  CHECK(code_of([] { superelevation_radius(0, 0.1, 0.08); }) == ErrorCode::invalid_argument);
}

TEST_CASE("standard rows") {
  const auto standards = RoadStandards::national_default();
  validate(standards);
  const auto& r60 = standards.row(60);
  CHECK(r60.lane_width_m == 3.5);
  CHECK(*r60.radius_at(0.08) == 125);
  const auto& r120 = standards.row(120);
  CHECK(r120.lane_width_m == 3.75);
  CHECK(*r120.radius_at(0.08) == 650);
  CHECK_FALSE(standards.row(40).radius_at(0.10).has_value());
  CHECK(*standards.row(40).radius_at(0.06) == 60);
  CHECK(code_of([&] { standards.row(50); }) == ErrorCode::not_found);
  CHECK(code_of([&] { r60.radius_at(0.07); }) == ErrorCode::invalid_argument);
}

TEST_CASE("standards validation") {
  auto rows = RoadStandards::national_default().rows();
  rows[3].min_radius_m[0] = 200.0;  // 10% radius above the 8% one
  CHECK(code_of([&] { validate(RoadStandards(rows)); }) == ErrorCode::invalid_argument);

  rows = RoadStandards::national_default().rows();
  rows[0].lane_width_m = 0;
  CHECK(code_of([&] { validate(RoadStandards(rows)); }) == ErrorCode::invalid_argument);
}

TEST_CASE("superelevation policies") {
  const auto policies = default_superelevation_policies();
  REQUIRE(policies.size() == 4);
  for (const auto& p : policies)
    for (double e : p.max_superelevation) CHECK(superelevation_column(e).has_value());
  CHECK(policies[0].max_superelevation == std::vector<double>{0.08});
}

TEST_CASE("lane geometry") {
  CHECK(code_of([] { LaneGeometry::curved(3.5, 3.0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { LaneGeometry::straight(0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { LaneGeometry::straight(3.5).radius(); }) == ErrorCode::invalid_argument);
  CHECK(LaneGeometry::curved(3.5, 125).approximation_valid());
  CHECK_FALSE(LaneGeometry::curved(3.0, 15).approximation_valid());
}

TEST_CASE("longitudinal extent") {
  const auto g60 = LaneGeometry::curved(3.5, 125);
  CHECK(curve_longitudinal_extent(3.5, g60) == 0.0);
  CHECK(curve_longitudinal_extent(3.4415, g60) == doctest::Approx(7.7).epsilon(1.3e-4));
  // At r = 650 the extent falls steeply with x, so the lateral extent is
  // carried at full precision rather than rounded to 0.1 mm.
  const auto g120 = LaneGeometry::curved(3.75, 650);
  CHECK(std::fabs(curve_longitudinal_extent(3.7386307733389721, g120) - 7.7) < 1e-3);
  CHECK(std::fabs(curve_longitudinal_extent(3.7386, g120) -
                  static_cast<double>(oracle::chord_extent(3.7386L, 3.75L, 650.0L))) < 1e-9);
  CHECK(code_of([&] { curve_longitudinal_extent(0.0, g60); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { curve_longitudinal_extent(3.6, g60); }) == ErrorCode::invalid_argument);
}

TEST_CASE("lateral extent") {
  const auto g60 = LaneGeometry::curved(3.5, 125);
  CHECK(curve_lateral_extent(0.0, g60) == 3.5);
  CHECK(curve_lateral_extent(7.7, g60) == doctest::Approx(3.4415).epsilon(1.5e-4));
  CHECK(curve_lateral_extent(7.7, LaneGeometry::curved(3.0, 15)) ==
        doctest::Approx(2.5445).epsilon(2e-4));
  CHECK_FALSE(curve_lateral_extent_detail(7.7, g60).clamped);
  CHECK(code_of([&] { curve_lateral_extent(-1.0, g60); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { curve_lateral_extent(300.0, g60); }) == ErrorCode::invalid_argument);
  const auto tight = LaneGeometry::curved(3.0, 15);
  CHECK(curve_lateral_extent(18.9, tight) > 0.0);
  CHECK(code_of([&] { curve_lateral_extent(19.0, tight); }) == ErrorCode::infeasible_geometry);
}

TEST_CASE("extent formulas agree with the chord oracle") {
  const auto standards = RoadStandards::national_default();
  for (const auto& row : standards.rows()) {
    for (double e : kSuperelevationColumns) {
      const auto r = row.radius_at(e);
      if (!r) continue;
      const auto g = LaneGeometry::curved(row.lane_width_m, *r);
      for (double y : {0.5, 4.7, 7.7, 9.4, 12.0}) {
        const double x = curve_lateral_extent(y, g);
        CHECK(std::fabs(x - static_cast<double>(oracle::chord_lateral(y, row.lane_width_m, *r))) < 1e-9);
        const double back = curve_longitudinal_extent(x, g);
        CHECK(std::fabs(back - y) < 1e-9);
        CHECK(std::fabs(static_cast<double>(oracle::chord_extent(x, row.lane_width_m, *r)) - y) < 1e-9);
      }
    }
  }
}

}
