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

#include "entdesign/config.hpp"

#include <stdexcept>

namespace entdesign::cli {

namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

}  // namespace

std::pair<int, int> parse_alpha_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int alpha = parse_int(text);
    return {alpha, alpha};
  }
  const int lo = parse_int(text.substr(0, colon));
  const int hi = parse_int(text.substr(colon + 1));
  if (hi < lo) throw std::invalid_argument("empty alpha range '" + text + "'");
  return {lo, hi};
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["state_dims"] = c.state_dims;
  j["choi_dims"] = c.choi_dims;
  j["d"] = c.d ? nlohmann::ordered_json(*c.d) : nullptr;
  j["alpha_min"] = c.alpha_min;
  j["alpha_max"] = c.alpha_max;
  j["a"] = c.a ? nlohmann::ordered_json(*c.a) : nullptr;
  j["theorems"] = c.theorems;
  j["field_constant"] = c.field_constant;
  j["samples"] = c.samples ? nlohmann::ordered_json(*c.samples) : nullptr;
  // seeds are 64-bit; keep them as decimal strings so no JSON reader rounds them
  j["seed"] = c.seed ? nlohmann::ordered_json(std::to_string(*c.seed)) : nullptr;
  j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
  j["out"] = c.out;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.state_dims = j.at("state_dims").get<std::vector<int>>();
  c.choi_dims = j.at("choi_dims").get<std::vector<int>>();
  if (!j.at("d").is_null()) c.d = j.at("d").get<int>();
  c.alpha_min = j.at("alpha_min").get<int>();
  c.alpha_max = j.at("alpha_max").get<int>();
  if (!j.at("a").is_null()) c.a = j.at("a").get<double>();
  c.theorems = j.at("theorems").get<std::vector<std::string>>();
  c.field_constant = j.at("field_constant").get<int>();
  if (!j.at("samples").is_null()) c.samples = j.at("samples").get<std::int64_t>();
  if (!j.at("seed").is_null()) c.seed = std::stoull(j.at("seed").get<std::string>());
  const auto format = j.at("format").get<std::string>();
  if (format != "csv" && format != "json") throw std::invalid_argument("unknown format '" + format + "'");
  c.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  c.out = j.at("out").get<std::string>();
  return c;
}

}  // namespace entdesign::cli
