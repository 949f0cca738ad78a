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

#include "locreq/safety_risk.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "locreq/error.hpp"

namespace locreq::risk {

namespace {

bool non_negative_count(const std::optional<double>& v) {
  return !v || (std::isfinite(*v) && *v >= 0.0);
}

std::string describe(const CrashStatistics& s) {
  return s.label.empty() ? std::string("crash statistics")
                         : "crash statistics '" + s.label + "'";
}

}  // namespace

void CrashStatistics::validate() const {
  require(std::isfinite(crashes) && crashes >= 0.0, ErrorCode::invalid_argument,
          describe(*this) + ": crashes must be >= 0");
  require(non_negative_count(fatal_crashes) && non_negative_count(fatalities) &&
              non_negative_count(total_miles) && non_negative_count(fleet_size) &&
              non_negative_count(km_per_vehicle),
          ErrorCode::invalid_argument,
          describe(*this) + ": counts and distances must be >= 0");
  require(attribution_fraction >= 0.0 && attribution_fraction <= 1.0,
          ErrorCode::invalid_argument,
          describe(*this) + ": attribution_fraction must lie in [0, 1]");
  require(total_miles.has_value() || (fleet_size && km_per_vehicle),
          ErrorCode::invalid_argument,
          describe(*this) +
              ": needs total_miles or both fleet_size and km_per_vehicle");
}

void SafetyTarget::validate() const {
  require(std::isfinite(tls) && tls > 0.0, ErrorCode::invalid_argument,
          "safety target: tls must be > 0");
  require(p_fi > 0.0 && p_fi <= 1.0, ErrorCode::invalid_argument,
          "safety target: p_fi must lie in (0, 1]");
}

double fleet_miles(double fleet_size, double km_per_vehicle, double km_to_mile) {
  require(fleet_size > 0.0 && km_per_vehicle > 0.0 && km_to_mile > 0.0,
          ErrorCode::invalid_argument,
          "fleet_miles: fleet size, km per vehicle and conversion factor must "
          "be > 0");
  return fleet_size * km_per_vehicle * km_to_mile;
}

double resolve_miles(const CrashStatistics& stats, double km_to_mile) {
  stats.validate();
  if (stats.total_miles) return *stats.total_miles;
  return fleet_miles(*stats.fleet_size, *stats.km_per_vehicle, km_to_mile);
}

double vehicle_failure_rate(const CrashStatistics& stats, double km_to_mile) {
  const double miles = resolve_miles(stats, km_to_mile);
  require(miles > 0.0, ErrorCode::domain_error,
          describe(stats) + ": zero miles driven");
  return stats.crashes / miles * stats.attribution_fraction;
}

double fatality_ratio(double fatalities, double fatal_crashes) {
  require(fatalities >= 0.0, ErrorCode::invalid_argument,
          "fatality_ratio: fatalities must be >= 0");
  require(fatal_crashes > 0.0, ErrorCode::domain_error,
          "fatality_ratio: fatal crash count must be > 0");
  return fatalities / fatal_crashes;
}

double total_integrity_budget(const SafetyTarget& target) {
  target.validate();
  return target.tls / target.p_fi;
}

double tls_from_measured(double measured_rate, double p_fi) {
  require(measured_rate >= 0.0, ErrorCode::invalid_argument,
          "tls_from_measured: rate must be >= 0");
  require(p_fi > 0.0 && p_fi <= 1.0, ErrorCode::invalid_argument,
          "tls_from_measured: p_fi must lie in (0, 1]");
  return p_fi * measured_rate;
}

namespace {

void validate_node(const AllocationNode& node, const std::string& path) {
  require(std::isfinite(node.weight) && node.weight >= 0.0,
          ErrorCode::invalid_tree, "node '" + path + "' has a negative weight");
  if (node.is_leaf()) return;
  double sum = 0.0;
  std::set<std::string> names;
  for (const auto& child : node.children) {
    require(!child.name.empty(), ErrorCode::invalid_tree,
            "node '" + path + "' has an unnamed child");
    require(child.name.find('.') == std::string::npos, ErrorCode::invalid_tree,
            "node name '" + child.name + "' may not contain '.'");
    require(names.insert(child.name).second, ErrorCode::invalid_tree,
            "node '" + path + "' has duplicate child '" + child.name + "'");
    sum += child.weight;
    validate_node(child, path + "." + child.name);
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "child weights of '" << path << "' sum to " << sum << ", not 1";
    fail(ErrorCode::invalid_tree, msg.str());
  }
}

void resolve(AllocationNode& node, double budget) {
  node.resolved_budget = budget;
  for (auto& child : node.children) resolve(child, budget * child.weight);
}

void flatten_into(const AllocationNode& node, const std::string& path,
                  std::vector<FlatNode>& out) {
  out.push_back({path, &node});
  for (const auto& child : node.children)
    flatten_into(child, path + "." + child.name, out);
}

}  // namespace

void validate_tree(const AllocationNode& tree) {
  require(!tree.name.empty(), ErrorCode::invalid_tree, "root node is unnamed");
  validate_node(tree, tree.name);
}

AllocationNode allocate_budget(AllocationNode tree, double root_budget) {
  require(std::isfinite(root_budget) && root_budget > 0.0,
          ErrorCode::invalid_argument, "allocate_budget: root budget must be > 0");
  validate_tree(tree);
  resolve(tree, root_budget);
  return tree;
}

const AllocationNode* find_node(const AllocationNode& tree,
                                std::string_view path) {
  if (path.empty() || path == tree.name) return &tree;
  std::string_view rest = path;
  if (rest.starts_with(tree.name) && rest.size() > tree.name.size() &&
      rest[tree.name.size()] == '.') {
    rest.remove_prefix(tree.name.size() + 1);
  }
  const AllocationNode* node = &tree;
  while (!rest.empty()) {
    const auto dot = rest.find('.');
    const auto head = rest.substr(0, dot);
    const AllocationNode* next = nullptr;
    for (const auto& child : node->children) {
      if (child.name == head) {
        next = &child;
        break;
      }
    }
    if (next == nullptr) return nullptr;
    node = next;
    rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  }
  return node;
}

std::vector<FlatNode> flatten(const AllocationNode& tree) {
  std::vector<FlatNode> out;
  flatten_into(tree, tree.name, out);
  return out;
}

double sum_of_leaf_budgets(const AllocationNode& tree) {
  if (tree.is_leaf()) return tree.resolved_budget.value_or(0.0);
  double sum = 0.0;
  for (const auto& child : tree.children) sum += sum_of_leaf_budgets(child);
  return sum;
}

const std::vector<SafetyLevelBand>& default_safety_bands() {
  static const std::vector<SafetyLevelBand> bands = {
      {1e-9, 1e-8, "SIL-4", "-", "DAL-A", "SIL-4"},
      {1e-8, 1e-7, "SIL-3", "ASIL-D", "DAL-B", "SIL-3"},
      {1e-7, 1e-6, "SIL-2", "ASIL-B/C", "DAL-C", "SIL-2"},
      {1e-6, 1e-5, "SIL-1", "ASIL-A", "DAL-D", "SIL-1"},
      {1e-5, std::numeric_limits<double>::infinity(), "(SIL-0)", "QM", "DAL-E",
       "(SIL-0)"},
  };
  return bands;
}

void validate_bands(const std::vector<SafetyLevelBand>& bands) {
  require(!bands.empty(), ErrorCode::invalid_argument, "no safety bands given");
  for (std::size_t i = 0; i < bands.size(); ++i) {
    require(bands[i].lower < bands[i].upper, ErrorCode::invalid_argument,
            "safety band " + std::to_string(i) + " has lower >= upper");
    if (i > 0) {
      require(bands[i - 1].upper <= bands[i].lower, ErrorCode::invalid_argument,
              "safety bands overlap or are out of order at index " +
                  std::to_string(i));
    }
  }
}

SafetyLevel safety_level_lookup(double rate_per_hour,
                                const std::vector<SafetyLevelBand>& bands) {
  require(rate_per_hour >= 0.0, ErrorCode::invalid_argument,
          "safety_level_lookup: rate must be >= 0");
  validate_bands(bands);
  // (lower, upper] intervals; anything above the top band lands in it.
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (rate_per_hour > bands[i].lower && rate_per_hour <= bands[i].upper)
      return {false, i, &bands[i]};
  }
  if (rate_per_hour > bands.back().upper)
    return {false, bands.size() - 1, &bands.back()};
  return {true, 0, nullptr};
}

}  // namespace locreq::risk
