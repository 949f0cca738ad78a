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
#include <string>

#include "doctest.h"
#include "locreq/error.hpp"
#include "locreq/run_config.hpp"
#include "locreq/text_io.hpp"
#include "scratch.hpp"

using namespace locreq;

namespace {

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST_SUITE("text_io") {

TEST_CASE("csv parsing") {
  const auto t = io::parse_csv("# note\n\na, b ,c\n1,2,3\n\n 4 ,5,6\n", "mem.csv");
  CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1][0] == "4");
  CHECK(t.line_numbers == std::vector<std::size_t>{4, 6});
  const auto msg = message_of([] { io::parse_csv("a,b\n1,2\n1\n", "bad.csv"); });
  CHECK(msg.find("bad.csv:3") != std::string::npos);
  CHECK(code_of([] { io::require_header(io::parse_csv("x,y\n", "h.csv"), {"x", "z"}); }) ==
        ErrorCode::parse_error);
}

TEST_CASE("numbers") {
  CHECK(io::parse_number("1.5e-3", "here") == 1.5e-3);
  CHECK(code_of([] { io::parse_number("1.5x", "here"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { io::parse_number("", "here"); }) == ErrorCode::parse_error);
  CHECK_FALSE(io::parse_optional_number("-", "here").has_value());
  CHECK_FALSE(io::parse_optional_number("", "here").has_value());
  CHECK(*io::parse_optional_number("-2", "here") == -2.0);
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(0.820757553288, 9) == "0.820757553");
  for (double v : {0.1, 1.0 / 3, 2.1912417248166042e-09, 123456.789, 1e-300}) {
    CHECK(io::parse_number(io::format_number(v), "rt") == v);
  }
}

TEST_CASE("bundled tables match the built-in defaults") {
  const auto dir = cli::data_dir();
  const auto standards = io::read_road_standards(dir / "road_standards.csv");
  const auto builtin = road::RoadStandards::national_default();
  REQUIRE(standards.rows().size() == builtin.rows().size());
  for (std::size_t i = 0; i < builtin.rows().size(); ++i) {
    CHECK(standards.rows()[i].design_speed_kmh == builtin.rows()[i].design_speed_kmh);
    CHECK(standards.rows()[i].lane_width_m == builtin.rows()[i].lane_width_m);
    CHECK(standards.rows()[i].min_radius_m == builtin.rows()[i].min_radius_m);
  }
  const auto vehicles = io::read_vehicle_classes(dir / "vehicles.csv");
  const auto classes = alert::default_vehicle_classes();
  REQUIRE(vehicles.size() == classes.size() + 1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(vehicles[i].label == classes[i].label);
    CHECK(vehicles[i].length_m == classes[i].length_m);
    CHECK(vehicles[i].width_m == classes[i].width_m);
  }
  const auto crashes = io::read_crash_statistics(dir / "crash_stats.csv");
  REQUIRE(crashes.size() == 2);
  CHECK(crashes[0].total_miles.has_value());
  CHECK_FALSE(crashes[1].total_miles.has_value());
  CHECK(*crashes[1].fleet_size == 2.4e8);
  const auto policies = io::read_superelevation_policies(dir / "superelevation.cfg");
  CHECK(policies.size() == 4);
}

TEST_CASE("table readers report line numbers") {
  Scratch s;
  const auto bad_radius = s.write(
      "roads.csv",
      "design_speed_kmh,lane_width_m,r_e10,r_e08,r_e06,r_e04\n60,3.5,115,abc,135,150\n");
  CHECK(message_of([&] { io::read_road_standards(bad_radius); }).find("roads.csv:2") !=
        std::string::npos);
  const auto bad_vehicle = s.write("veh.csv", "label,length_m,width_m\nX,1.0,2.0\n");
  CHECK(code_of([&] { io::read_vehicle_classes(bad_vehicle); }) != ErrorCode{});
  CHECK(code_of([&] { io::read_csv(s.path() / "missing.csv"); }) == ErrorCode::io_error);
  const auto bad_policy = s.write("pol.cfg", "[superelevation]\nx = 0.07\n");
  CHECK(message_of([&] { io::read_superelevation_policies(bad_policy); }).find("pol.cfg:2") !=
        std::string::npos);
}

TEST_CASE("ini parsing") {
  const auto doc = io::parse_ini("; c\n[a]\nk = v w \n# c\n[b.c]\nx=1\n", "mem.cfg");
  REQUIRE(doc.entries.size() == 2);
  CHECK(doc.entries[0].section == "a");
  CHECK(doc.entries[0].value == "v w");
  CHECK(doc.entries[1].line == 6);
  CHECK(code_of([] { io::parse_ini("[a\n", "m"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { io::parse_ini("[a]\nnoequals\n", "m"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { io::parse_ini("k = v\n", "m"); }) == ErrorCode::parse_error);
}

TEST_CASE("atomic writes and svg") {
  Scratch s;
  const auto p = s.path() / "out.txt";
  io::write_file_atomic(p, "one");
  io::write_file_atomic(p, "two");
  CHECK(slurp(p) == "two");
  CHECK(code_of([&] { io::write_file_atomic(s.path() / "no/such/dir/x", "z"); }) ==
        ErrorCode::io_error);
  const auto svg = io::svg_line_chart("t", "x", "y", {{"a", {{0, 0}, {1, 2}}}});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

}

TEST_SUITE("run_config") {

TEST_CASE("bundled configs load") {
  const auto china = cli::default_config();
  CHECK(china.crash_label == "China-2018");
  CHECK(china.target.tls == 2.2e-11);
  CHECK(china.tree.children.size() == 2);
  const auto us = cli::load_config(cli::data_dir() / "us.cfg");
  CHECK(us.crash_label == "US-2016");
  CHECK(us.accuracy_classes.size() == 6);
  CHECK(std::filesystem::exists(us.standards_path));
}

TEST_CASE("settings and their errors") {
  auto c = cli::default_config();
  const std::filesystem::path base = "/base";
  cli::apply_setting(c, "accuracy", "quantile_mode", "exact", base, "t");
  CHECK(c.quantile_mode == stats::QuantileMode::exact);
  cli::apply_setting(c, "inputs", "standards", "rel/x.csv", base, "t");
  CHECK(c.standards_path == std::filesystem::path("/base/rel/x.csv"));
  cli::apply_setting(c, "mc", "seed", "18446744073709551615", base, "t");
  CHECK(c.mc_seed == 18446744073709551615ull);
  CHECK(code_of([&] { cli::apply_setting(c, "mc", "seed", "-1", base, "t"); }) ==
        ErrorCode::parse_error);
  CHECK(code_of([&] { cli::apply_setting(c, "mc", "workers", "0", base, "t"); }) ==
        ErrorCode::parse_error);
  CHECK(code_of([&] { cli::apply_setting(c, "nope", "k", "v", base, "t"); }) ==
        ErrorCode::parse_error);
  CHECK(message_of([&] { cli::apply_setting(c, "scenario", "lon_cap_m", "x", base, "f.cfg:9"); })
            .find("f.cfg:9") != std::string::npos);
}

TEST_CASE("tree files") {
  Scratch s;
  const auto empty = s.write("empty_tree.cfg", "# nothing here\n");
  const auto msg = message_of([&] { cli::tree_from_ini_file(empty); });
  CHECK(msg.find("empty_tree.cfg") != std::string::npos);
  CHECK(code_of([&] { cli::tree_from_ini_file(empty); }) == ErrorCode::invalid_tree);

  const auto orphan = s.write("orphan.cfg", "[tree]\na.b = 1\n");
  CHECK(message_of([&] { cli::tree_from_ini_file(orphan); }).find("has no weight") !=
        std::string::npos);

  const auto twice = s.write("twice.cfg", "[tree]\na = 1\na = 1\n");
  CHECK(code_of([&] { cli::tree_from_ini_file(twice); }) == ErrorCode::parse_error);

  const auto ok = s.write("ok.cfg", "[tree]\na = 1/4\nb = 0.75\n");
  const auto tree = cli::tree_from_ini_file(ok);
  CHECK(tree.children[0].weight == 0.25);

  const auto cfg = s.write("both.cfg", "[risk]\ntree = ok.cfg\n[tree]\na = 1\n");
  CHECK(code_of([&] { cli::load_config(cfg); }) == ErrorCode::parse_error);
}

TEST_CASE("dumped configs reload to the same settings") {
  Scratch s;
  auto c = cli::default_config();
  c.quantile_mode = stats::QuantileMode::exact;
  c.attitude.d_phi = 0.021;
  c.mc_seed = 99;
  c.fig4_speeds = {20, 120};
  const auto text = cli::dump_config(c);
  const auto p = s.write("dump.cfg", text);
  const auto back = cli::load_config(p);
  CHECK(cli::dump_config(back) == text);
  CHECK(back.attitude.d_phi == 0.021);
  CHECK(back.tree.children[1].children.size() == 4);
}

}
