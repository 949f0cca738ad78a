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

#include "locreq/error.hpp"

namespace locreq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::domain_error: return "domain error";
    case ErrorCode::not_found: return "not found";
    case ErrorCode::invalid_tree: return "invalid allocation tree";
    case ErrorCode::infeasible_geometry: return "infeasible geometry";
    case ErrorCode::infeasible_budget: return "infeasible budget";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::io_error: return "i/o error";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace locreq
