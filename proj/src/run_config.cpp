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

#include "locreq/run_config.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "locreq/error.hpp"
#include "locreq/text_io.hpp"

namespace locreq::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::string_view kTreeRoot = "total";

fs::path resolve_path(std::string_view value, const fs::path& base_dir) {
  if (value.empty()) return {};
  fs::path p{std::string(value)};
  if (p.is_relative()) p = base_dir / p;
  return p.lexically_normal();
}

[[noreturn]] void bad_value(const std::string& where, std::string_view key,
                            std::string_view value, std::string_view expected) {
  fail(ErrorCode::parse_error, where + ": '" + std::string(key) + " = " +
                                   std::string(value) + "': expected " +
                                   std::string(expected));
}

double number(std::string_view key, std::string_view value,
              const std::string& where) {
  try {
    return io::parse_number(value, where + ": " + std::string(key));
  } catch (const Error&) {
    bad_value(where, key, value, "a number");
  }
}

std::uint64_t unsigned_integer(std::string_view key, std::string_view value,
                               const std::string& where) {
  std::uint64_t out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size())
    bad_value(where, key, value, "a non-negative integer");
  return out;
}

bool boolean(std::string_view key, std::string_view value,
             const std::string& where) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  bad_value(where, key, value, "true or false");
}

double weight_value(std::string_view text, const std::string& where) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return io::parse_number(text, where);
  const double num = io::parse_number(text.substr(0, slash), where);
  const double den = io::parse_number(text.substr(slash + 1), where);
  require(den != 0.0, ErrorCode::parse_error, where + ": zero denominator");
  return num / den;
}

std::vector<double> number_list(std::string_view key, std::string_view value,
                                const std::string& where) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    out.push_back(number(key, value.substr(start, comma - start), where));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

risk::AllocationNode& child_named(risk::AllocationNode& node,
                                  std::string_view name) {
  for (auto& c : node.children) {
    if (c.name == name) return c;
  }
  node.children.push_back(
      {std::string(name), std::numeric_limits<double>::quiet_NaN(), {}, {}});
  return node.children.back();
}

void add_tree_entry(risk::AllocationNode& root, std::string_view key,
                    std::string_view value, const std::string& where) {
  require(!key.empty() && key.front() != '.' && key.back() != '.',
          ErrorCode::parse_error, where + ": bad tree path '" + std::string(key) + "'");
  risk::AllocationNode* node = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const auto name = key.substr(start, dot - start);
    require(!name.empty(), ErrorCode::parse_error,
            where + ": bad tree path '" + std::string(key) + "'");
    node = &child_named(*node, name);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  require(std::isnan(node->weight), ErrorCode::parse_error,
          where + ": tree node '" + std::string(key) + "' given twice");
  node->weight = weight_value(value, where);
}

void check_weights_set(const risk::AllocationNode& node, const std::string& path,
                       const std::string& origin) {
  for (const auto& c : node.children) {
    const std::string child_path = path + "." + c.name;
    require(!std::isnan(c.weight), ErrorCode::invalid_tree,
            origin + ": tree node '" + child_path + "' has no weight");
    check_weights_set(c, child_path, origin);
  }
}

risk::AllocationNode tree_from_entries(const std::vector<io::IniEntry>& entries,
                                       const std::string& origin) {
  risk::AllocationNode root{std::string(kTreeRoot), 1.0, {}, {}};
  for (const auto& e : entries)
    add_tree_entry(root, e.key, e.value, origin + ":" + std::to_string(e.line));
  require(!root.children.empty(), ErrorCode::invalid_tree,
          origin + ": allocation tree is empty");
  check_weights_set(root, root.name, origin);
  return root;
}

void dump_tree(std::ostringstream& out, const risk::AllocationNode& node,
               const std::string& prefix) {
  for (const auto& c : node.children) {
    const std::string path = prefix.empty() ? c.name : prefix + "." + c.name;
    out << path << " = " << io::format_number(c.weight) << '\n';
    dump_tree(out, c, path);
  }
}

std::string mode_name(stats::QuantileMode m) {
  return m == stats::QuantileMode::paper ? "paper" : "exact";
}

}  // namespace

fs::path data_dir() { return fs::path(LOCREQ_DATA_DIR); }

risk::AllocationNode tree_from_ini_file(const fs::path& path) {
  const auto doc = io::read_ini(path);
  std::vector<io::IniEntry> entries;
  for (const auto& e : doc.entries) {
    require(e.section == "tree", ErrorCode::parse_error,
            doc.source + ":" + std::to_string(e.line) +
                ": unexpected section [" + e.section + "] in tree file");
    entries.push_back(e);
  }
  return tree_from_entries(entries, path.string());
}

void apply_setting(RunConfig& c, std::string_view section, std::string_view key,
                   std::string_view value, const fs::path& base_dir,
                   const std::string& where) {
  auto unknown = [&]() {
    fail(ErrorCode::parse_error, where + ": unknown setting [" +
                                     std::string(section) + "] " +
                                     std::string(key));
  };
  if (section == "inputs") {
    if (key == "standards") c.standards_path = resolve_path(value, base_dir);
    else if (key == "vehicles") c.vehicles_path = resolve_path(value, base_dir);
    else if (key == "crash_stats") c.crash_stats_path = resolve_path(value, base_dir);
    else if (key == "superelevation_policies")
      c.superelevation_path = resolve_path(value, base_dir);
    else if (key == "reference_vehicle") c.reference_vehicle = std::string(value);
    else unknown();
  } else if (section == "scenario") {
    if (key == "design_speed_kmh") c.design_speed_kmh = number(key, value, where);
    else if (key == "superelevation") c.superelevation = number(key, value, where);
    else if (key == "lon_cap_m") c.lon_cap = number(key, value, where);
    else if (key == "clearance_m") c.clearance = number(key, value, where);
    else if (key == "fig4_speeds_kmh") c.fig4_speeds = number_list(key, value, where);
    else if (key == "curve_samples")
      c.curve_samples = unsigned_integer(key, value, where);
    else unknown();
  } else if (section == "accuracy") {
    if (key == "quantile_mode") {
      if (value == "paper") c.quantile_mode = stats::QuantileMode::paper;
      else if (value == "exact") c.quantile_mode = stats::QuantileMode::exact;
      else bad_value(where, key, value, "paper or exact");
    } else if (key == "d_lambda") c.attitude.d_lambda = number(key, value, where);
    else if (key == "d_phi") c.attitude.d_phi = number(key, value, where);
    else if (key == "d_theta") c.attitude.d_theta = number(key, value, where);
    else if (key == "angle_95") c.angle_95 = number(key, value, where);
    else if (key == "coupling_form") {
      if (value == "verbatim") c.coupling = budget::CouplingForm::verbatim;
      else if (value == "alternative") c.coupling = budget::CouplingForm::alternative;
      else bad_value(where, key, value, "verbatim or alternative");
    } else if (key == "lateral_al_source") {
      if (value == "reference_vehicle")
        c.lateral_source = budget::LateralAlSource::reference_vehicle;
      else if (value == "per_class")
        c.lateral_source = budget::LateralAlSource::per_class;
      else bad_value(where, key, value, "reference_vehicle or per_class");
    } else if (key == "classes") {
      c.accuracy_classes.clear();
      std::size_t start = 0;
      while (!value.empty()) {
        const auto comma = value.find(',', start);
        auto label = value.substr(start, comma - start);
        while (!label.empty() && label.front() == ' ') label.remove_prefix(1);
        while (!label.empty() && label.back() == ' ') label.remove_suffix(1);
        if (label.empty()) bad_value(where, key, value, "comma-separated labels");
        c.accuracy_classes.emplace_back(label);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else unknown();
  } else if (section == "risk") {
    if (key == "crash_label") c.crash_label = std::string(value);
    else if (key == "tls") c.target.tls = number(key, value, where);
    else if (key == "p_fi") c.target.p_fi = number(key, value, where);
    else if (key == "km_to_mile") c.km_to_mile = number(key, value, where);
    else if (key == "tree") {
      const auto path = resolve_path(value, base_dir);
      c.tree = tree_from_ini_file(path);
      c.tree_origin = path.string();
    } else unknown();
  } else if (section == "mc") {
    if (key == "trials") c.mc_trials = unsigned_integer(key, value, where);
    else if (key == "sigma_lat_m") c.mc_sigma_lat = number(key, value, where);
    else if (key == "sigma_lon_m") c.mc_sigma_lon = number(key, value, where);
    else if (key == "sigma_heading_rad") c.mc_sigma_heading = number(key, value, where);
    else if (key == "lane") {
      if (value == "curved") c.mc_curved = true;
      else if (value == "straight") c.mc_curved = false;
      else bad_value(where, key, value, "curved or straight");
    } else if (key == "seed") c.mc_seed = unsigned_integer(key, value, where);
    else if (key == "workers") {
      const auto w = unsigned_integer(key, value, where);
      if (w < 1 || w > 1024) bad_value(where, key, value, "1..1024");
      c.mc_workers = static_cast<unsigned>(w);
    } else unknown();
  } else if (section == "output") {
    if (key == "paper_rounding") c.paper_rounding = boolean(key, value, where);
    else if (key == "svg") c.svg = boolean(key, value, where);
    else unknown();
  } else {
    unknown();
  }
}

RunConfig load_config(const fs::path& path) {
  const auto doc = io::read_ini(path);
  RunConfig c;
  c.source = fs::absolute(path).lexically_normal();
  const fs::path base = c.source.parent_path();
  std::vector<io::IniEntry> tree_entries;
  bool tree_file = false;
  for (const auto& e : doc.entries) {
    const std::string where = doc.source + ":" + std::to_string(e.line);
    if (e.section == "tree") {
      tree_entries.push_back(e);
      continue;
    }
    apply_setting(c, e.section, e.key, e.value, base, where);
    if (e.section == "risk" && e.key == "tree") tree_file = true;
  }
  if (!tree_entries.empty()) {
    require(!tree_file, ErrorCode::parse_error,
            doc.source + ": give either [risk] tree or an inline [tree], not both");
    c.tree = tree_from_entries(tree_entries, doc.source);
    c.tree_origin = doc.source;
  }
  return c;
}

RunConfig default_config() { return load_config(data_dir() / "china.cfg"); }

std::string dump_config(const RunConfig& c) {
  auto abs = [](const fs::path& p) {
    return p.empty() ? std::string() : fs::absolute(p).lexically_normal().string();
  };
  auto num = [](double v) { return io::format_number(v); };
  std::ostringstream out;
  out << "# effective configuration\n\n[inputs]\n"
      << "standards = " << abs(c.standards_path) << '\n'
      << "vehicles = " << abs(c.vehicles_path) << '\n'
      << "crash_stats = " << abs(c.crash_stats_path) << '\n'
      << "superelevation_policies = " << abs(c.superelevation_path) << '\n'
      << "reference_vehicle = " << c.reference_vehicle << '\n';
  out << "\n[scenario]\n"
      << "design_speed_kmh = " << num(c.design_speed_kmh) << '\n'
      << "superelevation = " << num(c.superelevation) << '\n'
      << "lon_cap_m = " << num(c.lon_cap) << '\n'
      << "clearance_m = " << num(c.clearance) << '\n'
      << "fig4_speeds_kmh = ";
  for (std::size_t i = 0; i < c.fig4_speeds.size(); ++i)
    out << (i ? "," : "") << num(c.fig4_speeds[i]);
  out << "\ncurve_samples = " << c.curve_samples << '\n';
  out << "\n[accuracy]\n"
      << "quantile_mode = " << mode_name(c.quantile_mode) << '\n'
      << "d_lambda = " << num(c.attitude.d_lambda) << '\n'
      << "d_phi = " << num(c.attitude.d_phi) << '\n'
      << "d_theta = " << num(c.attitude.d_theta) << '\n'
      << "angle_95 = " << num(c.angle_95) << '\n'
      << "coupling_form = "
      << (c.coupling == budget::CouplingForm::verbatim ? "verbatim" : "alternative")
      << '\n'
      << "lateral_al_source = "
      << (c.lateral_source == budget::LateralAlSource::reference_vehicle
              ? "reference_vehicle"
              : "per_class")
      << '\n'
      << "classes = ";
  for (std::size_t i = 0; i < c.accuracy_classes.size(); ++i)
    out << (i ? "," : "") << c.accuracy_classes[i];
  out << '\n';
  out << "\n[risk]\n"
      << "crash_label = " << c.crash_label << '\n'
      << "tls = " << num(c.target.tls) << '\n'
      << "p_fi = " << num(c.target.p_fi) << '\n'
      << "km_to_mile = " << num(c.km_to_mile) << '\n';
  out << "\n[tree]\n";
  dump_tree(out, c.tree, "");
  out << "\n[mc]\n"
      << "trials = " << c.mc_trials << '\n'
      << "sigma_lat_m = " << num(c.mc_sigma_lat) << '\n'
      << "sigma_lon_m = " << num(c.mc_sigma_lon) << '\n'
      << "sigma_heading_rad = " << num(c.mc_sigma_heading) << '\n'
      << "lane = " << (c.mc_curved ? "curved" : "straight") << '\n'
      << "seed = " << c.mc_seed << '\n'
      << "workers = " << c.mc_workers << '\n';
  out << "\n[output]\n"
      << "paper_rounding = " << (c.paper_rounding ? "true" : "false") << '\n'
      << "svg = " << (c.svg ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace locreq::cli
