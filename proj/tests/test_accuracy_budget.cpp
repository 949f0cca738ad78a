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
#include "locreq/accuracy_budget.hpp"
#include "locreq/error.hpp"
#include "oracles.hpp"

using namespace locreq;
using namespace locreq::budget;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

const alert::VehicleClass kCar{"car", 4.7, 1.8};
const alert::AlertLimits kLimits{0.82, 1.5, 1.5};
const AttitudeErrors kAngles{0.03, 0.03, 0.03};

}  // namespace

TEST_SUITE("accuracy_budget") {

TEST_CASE("simple lateral budget") {
  CHECK(lateral_budget_simple(0.82, kCar, 0.03) == doctest::Approx(0.679).epsilon(1e-12));
  const double a00 = lateral_budget_simple(0.82, {"A00", 3.7, 1.675}, 0.03);
  CHECK(a00 == doctest::Approx(0.709).epsilon(1e-12));
  CHECK(a00 / 3.12 == doctest::Approx(0.22724).epsilon(1e-4));
  CHECK(lateral_budget_simple(0.5, kCar, 0.0) == 0.5);
  CHECK(code_of([] { lateral_budget_simple(0.05, kCar, 0.03); }) == ErrorCode::infeasible_budget);
}

TEST_CASE("coupled budget") {
  const auto s = coupled_budget_detail(kLimits, kCar, kAngles);
  CHECK(std::fabs(s.errors.lateral - 0.667) < 0.002);
  CHECK(std::fabs(s.errors.longitudinal - 1.412) < 0.002);
  CHECK(std::fabs(s.errors.vertical - 1.340) < 0.002);
  CHECK(s.iterations > 0);

  const auto o = oracle::coupled_linear(0.82, 1.5, 1.5, 4.7, 1.8, 0.03, 0.03, 0.03);
  CHECK(std::fabs(s.errors.lateral - static_cast<double>(o.lat)) < 1e-9);
  CHECK(std::fabs(s.errors.longitudinal - static_cast<double>(o.lon)) < 1e-9);
  CHECK(std::fabs(s.errors.vertical - static_cast<double>(o.vert)) < 1e-9);

  const auto zero = coupled_budget({0.4, 1.1, 0.9}, kCar, {0, 0, 0});
  CHECK(zero.lateral == 0.4);
  CHECK(zero.longitudinal == 1.1);
  CHECK(zero.vertical == 0.9);

  CHECK(code_of([] { coupled_budget(kLimits, kCar, {0.35, 0.35, 0.35}); }) ==
        ErrorCode::infeasible_budget);
  CHECK(code_of([] { coupled_budget(kLimits, kCar, {-0.01, 0, 0}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("fixed point residual") {
  for (auto form : {CouplingForm::verbatim, CouplingForm::alternative}) {
    for (double a : {0.0, 0.01, 0.03, 0.05, 0.09}) {
      const AttitudeErrors angles{a, a * 0.7, a * 1.1};
      const auto e = coupled_budget(kLimits, kCar, angles, form);
      const auto lhs = coupled_lhs(e, kCar, angles, form);
      CHECK(std::fabs(lhs.lateral - kLimits.lateral) < 1e-9);
      CHECK(std::fabs(lhs.longitudinal - kLimits.longitudinal) < 1e-9);
      CHECK(std::fabs(lhs.vertical - kLimits.vertical) < 1e-9);
    }
  }
}

TEST_CASE("larger attitude errors shrink every component") {
  ErrorTriple prev = coupled_budget(kLimits, kCar, {0, 0, 0});
  for (double a = 0.005; a < 0.1; a += 0.005) {
    const auto e = coupled_budget(kLimits, kCar, {a, a, a});
    CHECK(e.lateral < prev.lateral);
    CHECK(e.longitudinal < prev.longitudinal);
    CHECK(e.vertical < prev.vertical);
    prev = e;
  }
}

TEST_CASE("attitude validation") {
  kAngles.validate();
  CHECK(code_of([] { AttitudeErrors{0.1, 0, 0}.validate(); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { AttitudeErrors{0, -0.01, 0}.validate(); }) == ErrorCode::invalid_argument);
}

TEST_CASE("protection verification") {
  const auto b = make_accuracy_budget(kLimits, kCar, kAngles, stats::QuantileMode::paper);
  const auto ok = verify_protection(b);
  CHECK(ok.contained);
  CHECK(std::fabs(ok.slack.lateral) < 1e-9);
  CHECK(std::fabs(ok.slack.longitudinal) < 1e-9);
  CHECK(std::fabs(ok.slack.vertical) < 1e-9);
  CHECK(b.accuracy_95.lateral == doctest::Approx(b.protection_level.lateral / 3.12).epsilon(1e-15));

  auto over = b;
  over.protection_level.lateral = kLimits.lateral + 1e-6;
  const auto bad = verify_protection(over);
  CHECK_FALSE(bad.contained);
  CHECK(bad.slack.lateral < 0.0);

  auto none = b;
  none.protection_level = {};
  none.attitude = {};
  const auto zero = verify_protection(none);
  CHECK(zero.contained);
  CHECK(zero.slack.lateral == kLimits.lateral);
  CHECK(zero.slack.longitudinal == kLimits.longitudinal);
  CHECK(zero.slack.vertical == kLimits.vertical);

  // With attitude errors the vehicle lever arms still use up part of the limit.
  none.attitude = kAngles;
  const auto tilted = verify_protection(none);
  CHECK(tilted.contained);
  CHECK(tilted.slack.lateral ==
        doctest::Approx(kLimits.lateral - kCar.length_m / 2 * 0.03).epsilon(1e-12));
}

TEST_CASE("accuracy table") {
  const auto standards = road::RoadStandards::national_default();
  const auto table = accuracy_table({60, 0.08, 1.5, 4.5}, standards,
                                    alert::reference_vehicle_class(),
                                    alert::default_vehicle_classes(), AccuracyPolicy{});
  REQUIRE(table.rows.size() == 6);
  CHECK(table.ratio == 3.12);
  const double expected[] = {0.227, 0.22, 0.217, 0.214, 0.213, 0.211};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::fabs(table.rows[i].lat_acc95 - expected[i]) <= 0.002);
    CHECK(std::fabs(table.rows[i].lon_acc95 - 0.47) <= 0.015);
    CHECK(std::fabs(table.rows[i].vert_acc95 - 0.458) <= 0.015);
    CHECK(table.rows[i].lon_residual ==
          doctest::Approx(table.rows[i].lon_acc95 - 0.47).epsilon(1e-12));
  }
  CHECK(table.rows.front().vehicle.label == "A00");
  CHECK(table.rows.back().vehicle.label == "D");

  AccuracyPolicy exact;
  exact.quantile_mode = stats::QuantileMode::exact;
  const auto t2 = accuracy_table({60, 0.08, 1.5, 4.5}, standards,
                                 alert::reference_vehicle_class(),
                                 alert::default_vehicle_classes(), exact);
  CHECK(std::fabs(t2.ratio - 3.1171) < 1e-3);
  CHECK(t2.rows[0].lat_acc95 > table.rows[0].lat_acc95);

  CHECK(code_of([&] {
          accuracy_table({60, 0.08, 1.5, 4.5}, standards, alert::reference_vehicle_class(), {},
                         AccuracyPolicy{});
        }) == ErrorCode::invalid_argument);
}

}
