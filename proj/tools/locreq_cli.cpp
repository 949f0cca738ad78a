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

// Command-line front end. Talks to the library only through locreq.h.

#include <cstdio>
#include <cstdint>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "locreq/locreq.h"

namespace {

int report_failure(locreq_status status, const char* what) {
  std::fprintf(stderr, "locreq: %s: %s: %s\n", what,
               locreq_status_string(status), locreq_last_error());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localization requirement calculator"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(locreq_version()));

  std::string config_path;
  std::string output_dir = ".";
  std::optional<std::string> quantile_mode;
  bool paper_rounding = false;
  std::optional<std::uint64_t> seed;

  app.add_option("--config", config_path, "Run configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--output", output_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--quantile-mode", quantile_mode, "Quantile constants")
      ->check(CLI::IsMember({"paper", "exact"}));
  app.add_flag("--paper-rounding", paper_rounding,
               "Format numbers to the printed digit counts");
  app.add_option("--seed", seed, "Monte Carlo seed");

  const char* descriptions[][2] = {
      {"risk-alloc", "Risk allocation tree and measured vehicle rate"},
      {"alert-limits", "Alert limits per design speed"},
      {"accuracy", "95% accuracy requirements per vehicle class"},
      {"curves", "Box extent and alert-limit trade-off curves"},
      {"mc", "Monte Carlo lane containment"},
      {"all", "Every artifact"}};
  for (const auto& d : descriptions) app.add_subcommand(d[0], d[1]);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  locreq_config* config = nullptr;
  locreq_status status = config_path.empty()
                             ? locreq_config_default(&config)
                             : locreq_config_load(config_path.c_str(), &config);
  if (status != LOCREQ_OK) return report_failure(status, "loading config");

  auto set = [&](const char* section, const char* key, const std::string& value) {
    return status == LOCREQ_OK
               ? (status = locreq_config_set(config, section, key, value.c_str()))
               : status;
  };
  if (quantile_mode) set("accuracy", "quantile_mode", *quantile_mode);
  if (paper_rounding) set("output", "paper_rounding", "true");
  if (seed) set("mc", "seed", std::to_string(*seed));
  if (status != LOCREQ_OK) {
    locreq_config_free(config);
    return report_failure(status, "applying options");
  }

  locreq_run* run = nullptr;
  status = locreq_run_command(config, command.c_str(), output_dir.c_str(), &run);
  locreq_config_free(config);
  if (status != LOCREQ_OK) return report_failure(status, command.c_str());

  for (size_t i = 0; i < locreq_run_warning_count(run); ++i)
    std::fprintf(stderr, "warning: %s\n", locreq_run_warning(run, i));
  for (size_t i = 0; i < locreq_run_artifact_count(run); ++i)
    std::printf("%s\n", locreq_run_artifact(run, i));
  locreq_run_free(run);
  return 0;
}
