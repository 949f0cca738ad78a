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

// End-to-end commands: each writes its CSV (and optional SVG) artifacts into
// an output directory and collects warnings.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "locreq/run_config.hpp"

namespace locreq::cli {

inline constexpr std::string_view kCommands[] = {
    "risk-alloc", "alert-limits", "accuracy", "curves", "mc", "all"};

bool is_command(std::string_view name);

struct RunOutcome {
  std::vector<std::filesystem::path> artifacts;
  std::vector<std::string> warnings;
};

/// Runs one command (or "all"). Always writes warnings.txt and
/// effective_config.cfg next to the artifacts; both are listed in
/// `artifacts`. Module errors propagate as locreq::Error.
RunOutcome run_command(const RunConfig& config, std::string_view command,
                       const std::filesystem::path& output_dir);

}  // namespace locreq::cli
