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
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace entdesign::cli {

/// One table cell. Empty cells print as "" in CSV and null in JSON.
/// Strings carry exact rationals ("p/q") and free text.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// RFC 4180 CSV with a header row; LF line endings.
void write_csv(std::ostream& out, const Table& table);

/// Rows as objects keyed by column, in column order.
nlohmann::ordered_json rows_to_json(const Table& table);

/// Text form of a cell as it appears in CSV.
std::string cell_text(const Cell& cell);

/// Both output formats reduced to the same string grid (header first), used
/// to check that CSV and JSON carry the same logical table.
std::vector<std::vector<std::string>> grid_from_csv(const std::string& text);
std::vector<std::vector<std::string>> grid_from_json(const nlohmann::ordered_json& document);

}  // namespace entdesign::cli
