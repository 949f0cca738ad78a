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

#include "locreq/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "locreq/error.hpp"

namespace locreq::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string where(const CsvTable& t, std::size_t row, std::string_view column) {
  return t.source + ":" + std::to_string(t.line_numbers[row]) + ": column '" +
         std::string(column) + "'";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

CsvTable parse_csv(std::string_view text, const std::string& source) {
  CsvTable table;
  table.source = source;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line =
        trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      auto cells = split(line, ',');
      if (table.header.empty()) {
        table.header = std::move(cells);
      } else {
        if (cells.size() != table.header.size()) {
          fail(ErrorCode::parse_error,
               source + ":" + std::to_string(line_no) + ": expected " +
                   std::to_string(table.header.size()) + " cells, found " +
                   std::to_string(cells.size()));
        }
        table.rows.push_back(std::move(cells));
        table.line_numbers.push_back(line_no);
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  require(!table.header.empty(), ErrorCode::parse_error,
          source + ": missing CSV header");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  return parse_csv(read_text(path), path.string());
}

void require_header(const CsvTable& table,
                    const std::vector<std::string_view>& expected) {
  bool ok = table.header.size() == expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i)
    ok = table.header[i] == expected[i];
  if (!ok) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i)
      want += (i ? "," : "") + std::string(expected[i]);
    fail(ErrorCode::parse_error,
         table.source + ":1: header must be '" + want + "'");
  }
}

double parse_number(std::string_view text, const std::string& where_) {
  const auto t = trim(text);
  double value = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    fail(ErrorCode::parse_error,
         where_ + ": expected a number, found '" + std::string(t) + "'");
  }
  return value;
}

std::optional<double> parse_optional_number(std::string_view text,
                                            const std::string& where_) {
  const auto t = trim(text);
  if (t.empty() || t == "-") return std::nullopt;
  return parse_number(t, where_);
}

road::RoadStandards read_road_standards(const std::filesystem::path& path) {
  const auto table = read_csv(path);
  require_header(table, {"design_speed_kmh", "lane_width_m", "r_e10", "r_e08",
                         "r_e06", "r_e04"});
  std::vector<road::RoadStandardRow> rows;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& cells = table.rows[i];
    road::RoadStandardRow row;
    row.design_speed_kmh =
        parse_number(cells[0], where(table, i, table.header[0]));
    row.lane_width_m = parse_number(cells[1], where(table, i, table.header[1]));
    for (std::size_t c = 0; c < 4; ++c) {
      row.min_radius_m[c] =
          parse_optional_number(cells[2 + c], where(table, i, table.header[2 + c]));
    }
    rows.push_back(row);
  }
  road::RoadStandards standards(std::move(rows));
  try {
    road::validate(standards);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
  return standards;
}

std::vector<alert::VehicleClass> read_vehicle_classes(
    const std::filesystem::path& path) {
  const auto table = read_csv(path);
  require_header(table, {"label", "length_m", "width_m"});
  std::vector<alert::VehicleClass> out;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& cells = table.rows[i];
    alert::VehicleClass v{cells[0],
                          parse_number(cells[1], where(table, i, "length_m")),
                          parse_number(cells[2], where(table, i, "width_m"))};
    try {
      v.validate();
    } catch (const Error& e) {
      throw Error(e.code(), table.source + ":" +
                                std::to_string(table.line_numbers[i]) + ": " +
                                e.what());
    }
    out.push_back(std::move(v));
  }
  require(!out.empty(), ErrorCode::parse_error,
          path.string() + ": no vehicle classes");
  return out;
}

std::vector<risk::CrashStatistics> read_crash_statistics(
    const std::filesystem::path& path) {
  const auto table = read_csv(path);
  require_header(table, {"label", "crashes", "fatal_crashes", "fatalities",
                         "total_miles", "fleet_size", "km_per_vehicle",
                         "attribution_fraction"});
  std::vector<risk::CrashStatistics> out;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& c = table.rows[i];
    const auto& h = table.header;
    risk::CrashStatistics s;
    s.label = c[0];
    s.crashes = parse_number(c[1], where(table, i, h[1]));
    s.fatal_crashes = parse_optional_number(c[2], where(table, i, h[2]));
    s.fatalities = parse_optional_number(c[3], where(table, i, h[3]));
    s.total_miles = parse_optional_number(c[4], where(table, i, h[4]));
    s.fleet_size = parse_optional_number(c[5], where(table, i, h[5]));
    s.km_per_vehicle = parse_optional_number(c[6], where(table, i, h[6]));
    s.attribution_fraction = parse_number(c[7], where(table, i, h[7]));
    try {
      s.validate();
    } catch (const Error& e) {
      throw Error(e.code(), table.source + ":" +
                                std::to_string(table.line_numbers[i]) + ": " +
                                e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

IniDocument parse_ini(std::string_view text, const std::string& source) {
  IniDocument doc;
  doc.source = source;
  std::string section;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? end : end - start);
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    line = trim(line);
    if (!line.empty()) {
      const std::string loc = source + ":" + std::to_string(line_no);
      if (line.front() == '[') {
        require(line.back() == ']' && line.size() > 2, ErrorCode::parse_error,
                loc + ": malformed section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
      } else {
        const auto eq = line.find('=');
        require(eq != std::string_view::npos, ErrorCode::parse_error,
                loc + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        require(!key.empty(), ErrorCode::parse_error, loc + ": empty key");
        require(!section.empty(), ErrorCode::parse_error,
                loc + ": key outside of any [section]");
        doc.entries.push_back({section, std::string(key),
                               std::string(trim(line.substr(eq + 1))), line_no});
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return doc;
}

IniDocument read_ini(const std::filesystem::path& path) {
  return parse_ini(read_text(path), path.string());
}

std::vector<road::SuperelevationPolicy> read_superelevation_policies(
    const std::filesystem::path& path) {
  const auto doc = read_ini(path);
  std::vector<road::SuperelevationPolicy> out;
  for (const auto& e : doc.entries) {
    const std::string loc = doc.source + ":" + std::to_string(e.line);
    require(e.section == "superelevation", ErrorCode::parse_error,
            loc + ": unexpected section [" + e.section + "]");
    road::SuperelevationPolicy policy{e.key, {}};
    for (const auto& cell : split(e.value, ',')) {
      const double value = parse_number(cell, loc);
      require(road::superelevation_column(value).has_value(),
              ErrorCode::parse_error,
              loc + ": superelevation must be one of 0.10, 0.08, 0.06, 0.04");
      policy.max_superelevation.push_back(value);
    }
    out.push_back(std::move(policy));
  }
  require(!out.empty(), ErrorCode::parse_error,
          path.string() + ": no superelevation policies");
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io_error, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(ErrorCode::io_error, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCode::io_error, "cannot replace '" + path.string() + "'");
  }
}

std::string format_number(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series) {
  constexpr double width = 640, height = 420;
  constexpr double left = 70, right = 20, top = 40, bottom = 55;
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!std::isfinite(x_min)) x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) y_max = y_min + 1;
  const double pw = width - left - right, ph = height - top - bottom;
  auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
  auto sy = [&](double y) { return top + ph - (y - y_min) / (y_max - y_min) * ph; };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(title)
      << "</text>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\""
      << left + pw << "\" y2=\"" << top + ph << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << top + ph << "\"/>\n</g>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = x_min + (x_max - x_min) * i / 5.0;
    const double fy = y_min + (y_max - y_min) * i / 5.0;
    svg << "<text x=\"" << sx(fx) << "\" y=\"" << top + ph + 16
        << "\" text-anchor=\"middle\">" << format_number(fx, 4) << "</text>\n";
    svg << "<text x=\"" << left - 6 << "\" y=\"" << sy(fy) + 4
        << "\" text-anchor=\"end\">" << format_number(fy, 4) << "</text>\n";
  }
  svg << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
  svg << "<text transform=\"translate(16," << top + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(y_label)
      << "</text>\n</g>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = colors[k % 4];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[k].points)
      svg << format_number(sx(x), 6) << ',' << format_number(sy(y), 6) << ' ';
    svg << "\"/>\n";
    svg << "<text x=\"" << left + pw - 4 << "\" y=\"" << top + 14 + 14.0 * k
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
        << "fill=\"" << color << "\">" << xml_escape(series[k].name)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace locreq::io
