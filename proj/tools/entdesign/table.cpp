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

#include "entdesign/table.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "entdesign/exact.hpp"

namespace entdesign::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table row has " + std::to_string(row.size()) + " cells for " +
                           std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double x) const { return format_shortest(x); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return nullptr;
  if (const auto* b = std::get_if<bool>(&cell)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* x = std::get_if<double>(&cell)) {
    // JSON has no NaN or infinity
    if (!std::isfinite(*x)) return format_shortest(*x);
    return *x;
  }
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  write_record(out, table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto& cell : row) fields.push_back(cell_text(cell));
    write_record(out, fields);
  }
}

nlohmann::ordered_json rows_to_json(const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) object[table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(object));
  }
  return rows;
}

std::vector<std::vector<std::string>> grid_from_csv(const std::string& text) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      grid.push_back(std::move(record));
      record.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (!field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    grid.push_back(std::move(record));
  }
  return grid;
}

std::vector<std::vector<std::string>> grid_from_json(const nlohmann::ordered_json& document) {
  std::vector<std::vector<std::string>> grid;
  const auto& rows = document.at("rows");
  const auto& columns = document.at("columns");
  grid.emplace_back(columns.begin(), columns.end());
  for (const auto& row : rows) {
    std::vector<std::string> record;
    for (const auto& name : columns) {
      const auto& v = row.at(name.get<std::string>());
      if (v.is_null()) {
        record.emplace_back();
      } else if (v.is_boolean()) {
        record.emplace_back(v.get<bool>() ? "true" : "false");
      } else if (v.is_number_integer()) {
        record.push_back(std::to_string(v.get<std::int64_t>()));
      } else if (v.is_number()) {
        record.push_back(format_shortest(v.get<double>()));
      } else {
        record.push_back(v.get<std::string>());
      }
    }
    grid.push_back(std::move(record));
  }
  return grid;
}

}  // namespace entdesign::cli
