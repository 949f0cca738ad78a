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

#include "locreq/accuracy_budget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locreq/error.hpp"

namespace locreq::budget {

namespace {

void require_angles_finite(const AttitudeErrors& a) {
  require(std::isfinite(a.d_lambda) && std::isfinite(a.d_phi) &&
              std::isfinite(a.d_theta) && a.d_lambda >= 0.0 && a.d_phi >= 0.0 &&
              a.d_theta >= 0.0,
          ErrorCode::invalid_argument, "attitude errors must be finite and >= 0");
}

double max_abs_step(const ErrorTriple& a, const ErrorTriple& b) {
  return std::max({std::abs(a.lateral - b.lateral),
                   std::abs(a.longitudinal - b.longitudinal),
                   std::abs(a.vertical - b.vertical)});
}

[[noreturn]] void infeasible(const alert::VehicleClass& vehicle,
                             const std::string& detail) {
  fail(ErrorCode::infeasible_budget,
       "vehicle '" + vehicle.label + "': " + detail);
}

}  // namespace

void AttitudeErrors::validate() const {
  require_angles_finite(*this);
  require(d_lambda < kMaxReasonableAngle && d_phi < kMaxReasonableAngle &&
              d_theta < kMaxReasonableAngle,
          ErrorCode::invalid_argument, "attitude errors must be below 0.1 rad");
}

double lateral_budget_simple(double lat_al, const alert::VehicleClass& vehicle,
                             double d_lambda) {
  vehicle.validate();
  require(std::isfinite(d_lambda) && d_lambda >= 0.0,
          ErrorCode::invalid_argument, "heading error must be >= 0");
  const double heading_term = vehicle.length_m * d_lambda;
  if (!(lat_al > heading_term) && !(d_lambda == 0.0 && lat_al >= 0.0)) {
    std::ostringstream msg;
    msg << "heading term " << heading_term << " m exceeds lateral alert limit "
        << lat_al << " m";
    infeasible(vehicle, msg.str());
  }
  return lat_al - heading_term;
}

ErrorTriple coupled_lhs(const ErrorTriple& e, const alert::VehicleClass& vehicle,
                        const AttitudeErrors& a, CouplingForm form) {
  const double half_l = vehicle.length_m / 2.0;
  const double half_w = vehicle.width_m / 2.0;
  const double lon_vert_angle =
      form == CouplingForm::verbatim ? a.d_phi : a.d_theta;
  return {
      e.lateral + (e.longitudinal + e.vertical + half_l) * a.d_lambda,
      e.longitudinal + (e.lateral + half_w) * a.d_phi + e.vertical * lon_vert_angle,
      e.vertical + (e.lateral + half_w) * a.d_theta +
          (e.longitudinal + half_l) * a.d_phi,
  };
}

CoupledSolution coupled_budget_detail(const alert::AlertLimits& limits,
                                      const alert::VehicleClass& vehicle,
                                      const AttitudeErrors& attitude,
                                      CouplingForm form) {
  vehicle.validate();
  require_angles_finite(attitude);
  require(limits.lateral >= 0.0 && limits.longitudinal >= 0.0 &&
              limits.vertical >= 0.0,
          ErrorCode::invalid_argument, "alert limits must be >= 0");

  const ErrorTriple al{limits.lateral, limits.longitudinal, limits.vertical};
  ErrorTriple x{};
  for (int it = 1; it <= kFixedPointMaxIterations; ++it) {
    // Tight inequalities: x = AL - (lhs(x) - x).
    const ErrorTriple lhs = coupled_lhs(x, vehicle, attitude, form);
    const ErrorTriple next{al.lateral - (lhs.lateral - x.lateral),
                           al.longitudinal - (lhs.longitudinal - x.longitudinal),
                           al.vertical - (lhs.vertical - x.vertical)};
    if (!std::isfinite(next.lateral) || !std::isfinite(next.longitudinal) ||
        !std::isfinite(next.vertical)) {
      infeasible(vehicle, "coupled budget diverged");
    }
    const double step = max_abs_step(next, x);
    x = next;
    if (step < kFixedPointTolerance) {
      if (x.lateral < 0.0 || x.longitudinal < 0.0 || x.vertical < 0.0) {
        std::ostringstream msg;
        msg << "attitude terms exhaust the alert limits (budget " << x.lateral
            << ", " << x.longitudinal << ", " << x.vertical << ")";
        infeasible(vehicle, msg.str());
      }
      return {x, it};
    }
  }
  infeasible(vehicle, "coupled budget did not converge in 1000 iterations");
}

AccuracyBudget make_accuracy_budget(const alert::AlertLimits& limits,
                                    const alert::VehicleClass& vehicle,
                                    const AttitudeErrors& attitude,
                                    stats::QuantileMode mode, CouplingForm form) {
  const ErrorTriple pl = coupled_budget(limits, vehicle, attitude, form);
  const double ratio = stats::confidence_ratio(
      stats::kIntegrityConfidence, stats::kAccuracyConfidence, mode);
  return {pl,
          {pl.lateral / ratio, pl.longitudinal / ratio, pl.vertical / ratio},
          attitude,
          limits,
          vehicle};
}

ProtectionReport verify_protection(const AccuracyBudget& budget,
                                   CouplingForm form, double tolerance) {
  const ErrorTriple lhs = coupled_lhs(budget.protection_level, budget.vehicle,
                                      budget.attitude, form);
  ProtectionReport report;
  report.slack = {budget.alert_limits.lateral - lhs.lateral,
                  budget.alert_limits.longitudinal - lhs.longitudinal,
                  budget.alert_limits.vertical - lhs.vertical};
  report.contained = report.slack.lateral >= -tolerance &&
                     report.slack.longitudinal >= -tolerance &&
                     report.slack.vertical >= -tolerance;
  return report;
}

AccuracyTable accuracy_table(const alert::ScenarioInputs& scenario,
                             const road::RoadStandards& standards,
                             const alert::VehicleClass& reference_vehicle,
                             const std::vector<alert::VehicleClass>& classes,
                             const AccuracyPolicy& policy) {
  require(!classes.empty(), ErrorCode::invalid_argument,
          "accuracy table needs at least one vehicle class");
  AttitudeErrors{policy.d_lambda, policy.angle_95, policy.angle_95}.validate();

  AccuracyTable table;
  table.policy = policy;
  table.reference_limits =
      alert::solve_scenario(scenario, reference_vehicle, standards).limits;
  table.ratio = stats::confidence_ratio(stats::kIntegrityConfidence,
                                        stats::kAccuracyConfidence,
                                        policy.quantile_mode);

  for (const auto& vehicle : classes) {
    alert::AlertLimits limits = table.reference_limits;
    try {
      if (policy.lateral_source == LateralAlSource::per_class)
        limits = alert::solve_scenario(scenario, vehicle, standards).limits;

      AccuracyRow row;
      row.vehicle = vehicle;
      row.lateral_al = limits.lateral;
      row.lat_acc95 =
          lateral_budget_simple(limits.lateral, vehicle, policy.d_lambda) /
          table.ratio;

      const double lon_al95 = limits.longitudinal / table.ratio;
      const double vert_al95 = limits.vertical / table.ratio;
      const double a = policy.angle_95;
      double lon = 0.0;
      double vert = 0.0;
      bool settled = false;
      for (int it = 0; it < kFixedPointMaxIterations && !settled; ++it) {
        const double next_lon = lon_al95 - a * (row.lat_acc95 + vert);
        const double next_vert = vert_al95 - a * (row.lat_acc95 + lon);
        settled = std::max(std::abs(next_lon - lon), std::abs(next_vert - vert)) <
                  kFixedPointTolerance;
        lon = next_lon;
        vert = next_vert;
      }
      if (!settled || lon < 0.0 || vert < 0.0)
        infeasible(vehicle, "no non-negative 95% longitudinal/vertical budget");

      row.lon_acc95 = lon;
      row.vert_acc95 = vert;
      row.lon_residual = lon - kReferenceLongitudinal95;
      row.vert_residual = vert - kReferenceVertical95;
      table.rows.push_back(row);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::infeasible_budget ||
          e.code() == ErrorCode::infeasible_geometry) {
        const std::string what = e.what();
        const std::string tag = "class " + vehicle.label + ": ";
        throw Error(e.code(), what.starts_with("vehicle '") ? what : tag + what);
      }
      throw;
    }
  }
  return table;
}

}  // namespace locreq::budget
