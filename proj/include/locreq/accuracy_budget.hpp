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

// Position-error budgets that keep the protection levels inside the alert
// limits once attitude errors are folded in, and the per-class 95% accuracy
// table derived from them.

#include <cstddef>
#include <string>
#include <vector>

#include "locreq/alert_limits.hpp"
#include "locreq/integrity_stats.hpp"
#include "locreq/road_geometry.hpp"

namespace locreq::budget {

/// Heading (yaw), and the two remaining attitude angles, in radians.
struct AttitudeErrors {
  double d_lambda = 0.0;
  double d_phi = 0.0;
  double d_theta = 0.0;

  /// Each angle must lie in [0, 0.1) rad.
  void validate() const;
};

inline constexpr double kMaxReasonableAngle = 0.1;

struct ErrorTriple {
  double lateral = 0.0;
  double longitudinal = 0.0;
  double vertical = 0.0;
};

/// How the longitudinal line of the coupled inequalities is written.
/// `verbatim` uses d_phi for both attitude terms; `alternative`
/// uses d_theta for the vertical cross term.
enum class CouplingForm { verbatim, alternative };

/// Largest lateral error with d_lat + l_v d_lambda <= lat_al.
double lateral_budget_simple(double lat_al, const alert::VehicleClass& vehicle,
                             double d_lambda);

/// Left-hand sides of the three coupled inequalities:
///   lat:  d_lat  + (d_lon + d_vert + l_v/2) d_lambda
///   lon:  d_lon  + (d_lat + w_v/2) d_phi + d_vert d_phi
///   vert: d_vert + (d_lat + w_v/2) d_theta + (d_lon + l_v/2) d_phi
ErrorTriple coupled_lhs(const ErrorTriple& errors,
                        const alert::VehicleClass& vehicle,
                        const AttitudeErrors& attitude,
                        CouplingForm form = CouplingForm::verbatim);

inline constexpr double kFixedPointTolerance = 1e-12;
inline constexpr int kFixedPointMaxIterations = 1000;

struct CoupledSolution {
  ErrorTriple errors;
  int iterations = 0;
};

/// Position errors making all three inequalities tight. Jacobi iteration
/// from the origin; throws infeasible_budget when a component is negative
/// or the iteration does not settle.
CoupledSolution coupled_budget_detail(const alert::AlertLimits& limits,
                                      const alert::VehicleClass& vehicle,
                                      const AttitudeErrors& attitude,
                                      CouplingForm form = CouplingForm::verbatim);

inline ErrorTriple coupled_budget(const alert::AlertLimits& limits,
                                  const alert::VehicleClass& vehicle,
                                  const AttitudeErrors& attitude,
                                  CouplingForm form = CouplingForm::verbatim) {
  return coupled_budget_detail(limits, vehicle, attitude, form).errors;
}

struct AccuracyBudget {
  ErrorTriple protection_level;
  ErrorTriple accuracy_95;
  AttitudeErrors attitude;
  alert::AlertLimits alert_limits;
  alert::VehicleClass vehicle;
};

/// Coupled budget at full integrity, rescaled to 95%.
AccuracyBudget make_accuracy_budget(const alert::AlertLimits& limits,
                                    const alert::VehicleClass& vehicle,
                                    const AttitudeErrors& attitude,
                                    stats::QuantileMode mode,
                                    CouplingForm form = CouplingForm::verbatim);

struct ProtectionReport {
  bool contained = false;
  ErrorTriple slack;  // alert limit minus left-hand side, per axis
};

ProtectionReport verify_protection(const AccuracyBudget& budget,
                                   CouplingForm form = CouplingForm::verbatim,
                                   double tolerance = 1e-9);

/// Which lateral alert limit feeds the per-class lateral column.
enum class LateralAlSource {
  reference_vehicle,  // one scenario limit shared by all classes
  per_class,          // each class solves the scenario with its own width
};

struct AccuracyPolicy {
  double d_lambda = 0.03;  // heading error at full integrity
  double angle_95 = 0.02;  // attitude error used in the 95% reconstruction
  stats::QuantileMode quantile_mode = stats::QuantileMode::paper;
  LateralAlSource lateral_source = LateralAlSource::reference_vehicle;
};

/// Reference longitudinal and vertical 95% accuracy values.
inline constexpr double kReferenceLongitudinal95 = 0.47;
inline constexpr double kReferenceVertical95 = 0.458;

struct AccuracyRow {
  alert::VehicleClass vehicle;
  double lateral_al = 0.0;
  double lat_acc95 = 0.0;
  double lon_acc95 = 0.0;
  double vert_acc95 = 0.0;
  double lon_residual = 0.0;   // lon_acc95 - reference
  double vert_residual = 0.0;  // vert_acc95 - reference
};

struct AccuracyTable {
  std::vector<AccuracyRow> rows;
  alert::AlertLimits reference_limits;
  double ratio = 0.0;
  AccuracyPolicy policy;
};

/// Lateral column: (Lat.AL - l_v d_lambda) / ratio. Longitudinal and vertical
/// columns: in the 95% domain, each equals AL / ratio minus angle_95 times
/// the sum of the other two 95% components, solved jointly with the lateral
/// column held fixed. Rows keep the order of `classes`.
AccuracyTable accuracy_table(const alert::ScenarioInputs& scenario,
                             const road::RoadStandards& standards,
                             const alert::VehicleClass& reference_vehicle,
                             const std::vector<alert::VehicleClass>& classes,
                             const AccuracyPolicy& policy);

}  // namespace locreq::budget
