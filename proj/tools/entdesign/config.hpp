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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace entdesign::cli {

enum class OutputFormat { csv, json };

/// Parsed invocation. Only the fields a command uses are set.
struct RunConfig {
  std::string command;
  std::vector<int> state_dims;  // {d_A, d_B} or empty
  std::vector<int> choi_dims;   // {d_A, d_B, d_C, d_D} or empty
  std::optional<int> d;
  int alpha_min = 2;
  int alpha_max = 2;
  std::optional<double> a;
  std::vector<std::string> theorems;
  int field_constant = 2;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::csv;
  std::string out;  // empty means stdout

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::ordered_json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// "N" or "lo:hi" (inclusive).
std::pair<int, int> parse_alpha_range(const std::string& text);

}  // namespace entdesign::cli
