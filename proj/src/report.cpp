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

#include "locreq/report.hpp"

#include <algorithm>
#include <sstream>

#include "locreq/accuracy_budget.hpp"
#include "locreq/alert_limits.hpp"
#include "locreq/containment_mc.hpp"
#include "locreq/error.hpp"
#include "locreq/integrity_stats.hpp"
#include "locreq/road_geometry.hpp"
#include "locreq/safety_risk.hpp"
#include "locreq/text_io.hpp"

namespace locreq::cli {

namespace {

namespace fs = std::filesystem;

class Run {
 public:
  Run(const RunConfig& config, fs::path output_dir)
      : config_(config), dir_(std::move(output_dir)) {}

  const RunConfig& config() const { return config_; }

  void emit(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    io::write_file_atomic(path, content);
    outcome_.artifacts.push_back(path);
  }

  void warn(std::string message) { outcome_.warnings.push_back(std::move(message)); }

  std::string num(double value, int printed_digits) const {
    return io::format_number(value, config_.paper_rounding ? printed_digits : 17);
  }

  const road::RoadStandards& standards() {
    if (!standards_) {
      standards_ = config_.standards_path.empty()
                       ? road::RoadStandards::national_default()
                       : io::read_road_standards(config_.standards_path);
    }
    return *standards_;
  }

  const std::vector<alert::VehicleClass>& vehicles() {
    if (!vehicles_) {
      if (config_.vehicles_path.empty()) {
        auto v = alert::default_vehicle_classes();
        v.push_back(alert::reference_vehicle_class());
        vehicles_ = std::move(v);
      } else {
        vehicles_ = io::read_vehicle_classes(config_.vehicles_path);
      }
    }
    return *vehicles_;
  }

  const alert::VehicleClass& vehicle(const std::string& label) {
    for (const auto& v : vehicles()) {
      if (v.label == label) return v;
    }
    fail(ErrorCode::not_found, "vehicle class '" + label + "' is not defined");
  }

  const alert::VehicleClass& reference_vehicle() {
    return vehicle(config_.reference_vehicle);
  }

  alert::ScenarioInputs scenario(double speed) const {
    return {speed, config_.superelevation, config_.lon_cap, config_.clearance};
  }

  RunOutcome finish() {
    std::string text;
    for (const auto& w : outcome_.warnings) text += w + '\n';
    emit("warnings.txt", text);
    emit("effective_config.cfg", dump_config(config_));
    return std::move(outcome_);
  }

 private:
  const RunConfig& config_;
  fs::path dir_;
  RunOutcome outcome_;
  std::optional<road::RoadStandards> standards_;
  std::optional<std::vector<alert::VehicleClass>> vehicles_;
};

std::string speed_tag(double v) { return io::format_number(v, 6); }

void risk_alloc(Run& run) {
  const auto& c = run.config();
  require(!c.crash_stats_path.empty(), ErrorCode::invalid_argument,
          "risk-alloc: no crash statistics file configured");
  const auto all_stats = io::read_crash_statistics(c.crash_stats_path);
  const risk::CrashStatistics* stats = nullptr;
  for (const auto& s : all_stats) {
    if (s.label == c.crash_label) stats = &s;
  }
  if (stats == nullptr) {
    fail(ErrorCode::not_found, c.crash_stats_path.string() + ": no row labelled '" +
                                   c.crash_label + "'");
  }
  if (c.tree.children.empty()) {
    fail(ErrorCode::invalid_tree,
         (c.tree_origin.empty() ? std::string("configuration") : c.tree_origin) +
             ": allocation tree is empty");
  }

  const double measured = risk::vehicle_failure_rate(*stats, c.km_to_mile);
  const double total = risk::total_integrity_budget(c.target);
  risk::AllocationNode tree;
  try {
    tree = risk::allocate_budget(c.tree, total);
  } catch (const Error& e) {
    throw Error(e.code(), c.tree_origin + ": " + e.what());
  }

  std::ostringstream csv;
  csv << "item,weight,value,unit\n";
  for (const auto& node : risk::flatten(tree)) {
    csv << node.path << ','
        << (node.node == &tree ? std::string("1") : run.num(node.node->weight, 17))
        << ',' << run.num(*node.node->resolved_budget, 2) << ",failures_per_mile\n";
  }
  csv << "measured_vehicle_rate,," << run.num(measured, 2)
      << ",failures_per_mile\n";
  if (const auto* veh = risk::find_node(tree, "vehicle"); veh && veh != &tree) {
    csv << "allocated_vehicle_budget,," << run.num(*veh->resolved_budget, 2)
        << ",failures_per_mile\n";
    csv << "measured_to_allocated_vehicle,,"
        << run.num(measured / *veh->resolved_budget, 3) << ",ratio\n";
  }
  csv << "tls,," << run.num(c.target.tls, 2) << ",fatal_accidents_per_mile\n";
  csv << "tls_from_measured,,"
      << run.num(risk::tls_from_measured(measured, c.target.p_fi), 2)
      << ",fatal_accidents_per_mile\n";
  if (stats->fatalities && stats->fatal_crashes) {
    csv << "fatality_ratio,,"
        << run.num(risk::fatality_ratio(*stats->fatalities, *stats->fatal_crashes), 3)
        << ",fatalities_per_fatal_crash\n";
  }
  csv << "# crash_label=" << stats->label
      << " km_to_mile=" << io::format_number(c.km_to_mile)
      << " p_fi=" << io::format_number(c.target.p_fi) << '\n';
  run.emit("risk_allocation.csv", csv.str());
}

void alert_limits(Run& run) {
  const auto& c = run.config();
  const auto& vehicle = run.reference_vehicle();
  std::ostringstream csv, meta;
  csv << "design_speed_kmh,lat_al_m,lon_al_m\n";
  for (const auto& row : run.standards().rows()) {
    const double v = row.design_speed_kmh;
    if (!row.radius_at(c.superelevation)) {
      run.warn("alert-limits: " + speed_tag(v) + " km/h has no minimum radius at " +
               io::format_number(c.superelevation * 100.0, 6) +
               "% superelevation; row omitted");
      continue;
    }
    const auto result = alert::solve_scenario(run.scenario(v), vehicle, run.standards());
    csv << speed_tag(v) << ',' << run.num(result.limits.lateral, 9) << ','
        << run.num(result.limits.longitudinal, 9) << '\n';
    meta << "# v=" << speed_tag(v) << " w=" << io::format_number(result.lane_width)
         << " r=" << io::format_number(result.radius)
         << " x=" << io::format_number(result.box.x)
         << " y=" << io::format_number(result.box.y)
         << " clamped_to_lane=" << (result.clamped_to_lane ? "true" : "false")
         << " approximation_valid=" << (result.approximation_valid ? "true" : "false")
         << '\n';
    if (result.clamped_to_lane) {
      run.warn("alert-limits: " + speed_tag(v) +
               " km/h box width clamped to the lane width");
    }
    if (!result.approximation_valid) {
      run.warn("alert-limits: " + speed_tag(v) + " km/h has r/w = " +
               io::format_number(result.radius / result.lane_width, 3) +
               " < 10; the centerline-radius approximation is loose");
    }
  }
  csv << "# vehicle=" << vehicle.label
      << " length_m=" << io::format_number(vehicle.length_m)
      << " width_m=" << io::format_number(vehicle.width_m)
      << " superelevation=" << io::format_number(c.superelevation)
      << " lon_cap_m=" << io::format_number(c.lon_cap) << '\n'
      << meta.str();
  run.emit("table7.csv", csv.str());
}

void accuracy(Run& run) {
  const auto& c = run.config();
  std::vector<alert::VehicleClass> classes;
  if (c.accuracy_classes.empty()) {
    for (const auto& v : run.vehicles()) {
      if (v.label != c.reference_vehicle) classes.push_back(v);
    }
  } else {
    for (const auto& label : c.accuracy_classes) classes.push_back(run.vehicle(label));
  }
  budget::AccuracyPolicy policy;
  policy.d_lambda = c.attitude.d_lambda;
  policy.angle_95 = c.angle_95;
  policy.quantile_mode = c.quantile_mode;
  policy.lateral_source = c.lateral_source;
  const auto table = budget::accuracy_table(run.scenario(c.design_speed_kmh),
                                            run.standards(), run.reference_vehicle(),
                                            classes, policy);

  // Full-integrity coupled budget for the reference vehicle.
  c.attitude.validate();
  const auto reference = budget::make_accuracy_budget(
      table.reference_limits, run.reference_vehicle(), c.attitude,
      c.quantile_mode, c.coupling);

  std::ostringstream csv;
  csv << "class,length_m,width_m,lat_acc95_m,lon_acc95_m,vert_acc95_m\n";
  for (const auto& row : table.rows) {
    csv << row.vehicle.label << ',' << io::format_number(row.vehicle.length_m)
        << ',' << io::format_number(row.vehicle.width_m) << ','
        << run.num(row.lat_acc95, 3) << ',' << run.num(row.lon_acc95, 3) << ','
        << run.num(row.vert_acc95, 3) << '\n';
  }
  csv << "# design_speed_kmh=" << speed_tag(c.design_speed_kmh)
      << " superelevation=" << io::format_number(c.superelevation)
      << " reference_vehicle=" << run.reference_vehicle().label << '\n'
      << "# quantile_mode="
      << (c.quantile_mode == stats::QuantileMode::paper ? "paper" : "exact")
      << " ratio=" << io::format_number(table.ratio) << '\n'
      << "# alert_limits lateral=" << io::format_number(table.reference_limits.lateral)
      << " longitudinal=" << io::format_number(table.reference_limits.longitudinal)
      << " vertical=" << io::format_number(table.reference_limits.vertical) << '\n'
      << "# attitude d_lambda=" << io::format_number(c.attitude.d_lambda)
      << " d_phi=" << io::format_number(c.attitude.d_phi)
      << " d_theta=" << io::format_number(c.attitude.d_theta)
      << " angle_95=" << io::format_number(c.angle_95) << '\n'
      << "# lateral_al_source="
      << (c.lateral_source == budget::LateralAlSource::reference_vehicle
              ? "reference_vehicle"
              : "per_class")
      << " lateral_rule=(lat_al-l_v*d_lambda)/ratio\n"
      << "# lon/vert rule: 95% domain, each = AL/ratio - angle_95*(sum of the "
         "other two 95% components)\n";
  for (const auto& row : table.rows) {
    csv << "# residual class=" << row.vehicle.label
        << " lon=" << io::format_number(row.lon_residual, 6)
        << " vert=" << io::format_number(row.vert_residual, 6) << '\n';
  }
  csv << "# coupled_budget reference protection_level="
      << io::format_number(reference.protection_level.lateral, 9) << ','
      << io::format_number(reference.protection_level.longitudinal, 9) << ','
      << io::format_number(reference.protection_level.vertical, 9)
      << " accuracy_95=" << io::format_number(reference.accuracy_95.lateral, 9)
      << ',' << io::format_number(reference.accuracy_95.longitudinal, 9) << ','
      << io::format_number(reference.accuracy_95.vertical, 9) << " coupling="
      << (c.coupling == budget::CouplingForm::verbatim ? "verbatim" : "alternative")
      << '\n';
  run.emit("table8.csv", csv.str());
}

void curves(Run& run) {
  const auto& c = run.config();
  const auto& vehicle = run.reference_vehicle();
  std::vector<io::SvgSeries> fig4_series;
  for (double v : c.fig4_speeds) {
    if (!run.standards().row(v).radius_at(c.superelevation)) {
      run.warn("curves: " + speed_tag(v) +
               " km/h has no minimum radius at this superelevation; skipped");
      continue;
    }
    const auto geom = alert::scenario_geometry(run.standards(), v, c.superelevation);
    const auto points = alert::extent_curve(geom, c.curve_samples);
    std::ostringstream csv;
    csv << "x_m,y_m\n";
    io::SvgSeries series{speed_tag(v) + " km/h (w=" +
                             io::format_number(geom.lane_width()) + " m, r=" +
                             io::format_number(geom.radius()) + " m)",
                         {}};
    for (const auto& p : points) {
      csv << io::format_number(p.x) << ',' << io::format_number(p.y) << '\n';
      series.points.emplace_back(p.x, p.y);
    }
    run.emit("fig4_" + speed_tag(v) + ".csv", csv.str());
    fig4_series.push_back(std::move(series));
  }
  if (c.svg && !fig4_series.empty()) {
    run.emit("fig4.svg", io::svg_line_chart("Warning-box extents in a curved lane",
                                            "lateral extent x (m)",
                                            "longitudinal extent y (m)",
                                            fig4_series));
  }

  const auto geom =
      alert::scenario_geometry(run.standards(), c.design_speed_kmh, c.superelevation);
  const double cap = alert::longitudinal_cap(vehicle, c.lon_cap);
  const auto points = alert::tradeoff_curve(geom, vehicle, c.curve_samples, cap);
  std::ostringstream csv;
  csv << "lateral_al_m,longitudinal_al_m\n";
  io::SvgSeries series{vehicle.label + " at " + speed_tag(c.design_speed_kmh) +
                           " km/h",
                       {}};
  for (const auto& p : points) {
    csv << io::format_number(p.lateral_al) << ','
        << io::format_number(p.longitudinal_al) << '\n';
    series.points.emplace_back(p.lateral_al, p.longitudinal_al);
  }
  run.emit("fig5.csv", csv.str());
  if (c.svg) {
    io::SvgSeries cap_line{"longitudinal cap", {}};
    cap_line.points = {{series.points.front().first, cap},
                       {series.points.back().first, cap}};
    run.emit("fig5.svg", io::svg_line_chart("Lateral vs longitudinal alert limit",
                                            "lateral alert limit (m)",
                                            "longitudinal alert limit (m)",
                                            {series, cap_line}));
  }
}

void monte_carlo(Run& run) {
  const auto& c = run.config();
  const auto& row = run.standards().row(c.design_speed_kmh);
  mc::McConfig cfg;
  cfg.trials = c.mc_trials;
  cfg.sigma_lat = c.mc_sigma_lat;
  cfg.sigma_lon = c.mc_sigma_lon;
  cfg.sigma_heading = c.mc_sigma_heading;
  cfg.geometry = c.mc_curved ? alert::scenario_geometry(run.standards(),
                                                        c.design_speed_kmh,
                                                        c.superelevation)
                             : road::LaneGeometry::straight(row.lane_width_m);
  cfg.vehicle = run.reference_vehicle();
  cfg.lon_cap = c.lon_cap;
  cfg.seed = c.mc_seed;
  cfg.workers = c.mc_workers;
  const auto result = mc::containment_rate(cfg);

  std::ostringstream csv;
  csv << "trials,failures,rate,ci_low,ci_high,seed,workers\n"
      << result.trials << ',' << result.failures << ','
      << io::format_number(result.rate) << ',' << io::format_number(result.ci_low)
      << ',' << io::format_number(result.ci_high) << ',' << result.seed << ','
      << result.workers << '\n';
  csv << "# lane=" << (c.mc_curved ? "curved" : "straight")
      << " design_speed_kmh=" << speed_tag(c.design_speed_kmh)
      << " lane_width_m=" << io::format_number(cfg.geometry.lane_width());
  if (cfg.geometry.is_curved())
    csv << " radius_m=" << io::format_number(cfg.geometry.radius());
  csv << '\n'
      << "# vehicle=" << cfg.vehicle.label
      << " length_m=" << io::format_number(cfg.vehicle.length_m)
      << " width_m=" << io::format_number(cfg.vehicle.width_m)
      << " lon_cap_m=" << io::format_number(cfg.lon_cap) << '\n'
      << "# sigma_lat_m=" << io::format_number(cfg.sigma_lat)
      << " sigma_lon_m=" << io::format_number(cfg.sigma_lon)
      << " sigma_heading_rad=" << io::format_number(cfg.sigma_heading) << '\n'
      << "# interval=wilson confidence=0.95\n"
      << "# note: " << mc::kIntegrityCaveat << '\n';
  run.emit("mc_report.csv", csv.str());
}

}  // namespace

bool is_command(std::string_view name) {
  return std::find(std::begin(kCommands), std::end(kCommands), name) !=
         std::end(kCommands);
}

RunOutcome run_command(const RunConfig& config, std::string_view command,
                       const fs::path& output_dir) {
  require(is_command(command), ErrorCode::invalid_argument,
          "unknown command '" + std::string(command) + "'");
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec || !fs::is_directory(output_dir)) {
    fail(ErrorCode::io_error,
         "cannot create output directory '" + output_dir.string() + "'");
  }
  Run run(config, output_dir);
  const bool all = command == "all";
  if (all || command == "risk-alloc") risk_alloc(run);
  if (all || command == "alert-limits") alert_limits(run);
  if (all || command == "accuracy") accuracy(run);
  if (all || command == "curves") curves(run);
  if (all || command == "mc") monte_carlo(run);
  return run.finish();
}

}  // namespace locreq::cli
