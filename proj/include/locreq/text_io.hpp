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

// Readers for the bundled CSV/INI inputs and writers for report artifacts.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locreq/alert_limits.hpp"
#include "locreq/road_geometry.hpp"
#include "locreq/safety_risk.hpp"

namespace locreq::io {

struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based, one per row
};

/// Comma-separated, no quoting. Blank lines and lines starting with '#' are
/// skipped; cells are trimmed.
CsvTable parse_csv(std::string_view text, const std::string& source);
CsvTable read_csv(const std::filesystem::path& path);

/// Throws parse_error unless the header matches exactly.
void require_header(const CsvTable& table,
                    const std::vector<std::string_view>& expected);

double parse_number(std::string_view text, const std::string& where);
std::optional<double> parse_optional_number(std::string_view text,
                                            const std::string& where);

road::RoadStandards read_road_standards(const std::filesystem::path& path);
std::vector<alert::VehicleClass> read_vehicle_classes(
    const std::filesystem::path& path);
std::vector<risk::CrashStatistics> read_crash_statistics(
    const std::filesystem::path& path);

struct IniEntry {
  std::string section;
  std::string key;
  std::string value;
  std::size_t line;
};

struct IniDocument {
  std::string source;
  std::vector<IniEntry> entries;  // file order
};

/// `[section]` headers and `key = value` lines; '#' and ';' start comments.
IniDocument parse_ini(std::string_view text, const std::string& source);
IniDocument read_ini(const std::filesystem::path& path);

std::vector<road::SuperelevationPolicy> read_superelevation_policies(
    const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

/// printf-style %.<digits>g.
std::string format_number(double value, int significant_digits = 17);

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Static line chart with labelled axes; no external renderer.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series);

}  // namespace locreq::io
