// Copyright 2026 The entdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "entdesign/config.hpp"
#include "entdesign/table.hpp"

namespace entdesign::cli {

inline constexpr int kOutputSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Invalid invocation or parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  Table table;
  int exit_code = kExitOk;
  std::vector<std::string> failures;
};

/// Parses argv (without the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

CommandResult cmd_moment(const RunConfig& config);
CommandResult cmd_bounds(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_gap_design(const RunConfig& config);

CommandResult dispatch(const RunConfig& config);

/// Serialized document for a finished command, exactly as written to the output.
std::string render(const RunConfig& config, const Table& table);

/// Full CLI: parse, run, write the table to `out` (or --out), diagnostics to
/// `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entdesign::cli
