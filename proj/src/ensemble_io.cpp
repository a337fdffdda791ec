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

#include "entdesign/ensemble_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace entdesign {

namespace {

using nlohmann::json;

json encode_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({format_shortest(m(i, j).real()), format_shortest(m(i, j).imag())}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double decode_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw std::invalid_argument("ensemble JSON: expected a number or numeric string, got " + j.dump());
}

ComplexMatrix decode_matrix(const json& j, int dimension, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != dimension) {
    throw std::invalid_argument("ensemble JSON: matrix must have " + std::to_string(dimension) + " rows");
  }
  ComplexMatrix m(dimension, cols);
  for (int i = 0; i < dimension; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("ensemble JSON: row " + std::to_string(i) + " must have " + std::to_string(cols) +
                                  " entries");
    }
    for (int k = 0; k < cols; ++k) {
      const json& entry = row[static_cast<std::size_t>(k)];
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("ensemble JSON: complex entries are [re, im] pairs");
      }
      m(i, k) = Complex(decode_number(entry[0]), decode_number(entry[1]));
    }
  }
  return m;
}

template <typename Ensemble, typename Encode>
json encode(const Ensemble& e, std::string_view kind, Encode&& encode_member) {
  json members = json::array();
  for (std::size_t k = 0; k < e.size(); ++k) {
    members.push_back({{"weight", format_shortest(e.weights()[k])}, {"matrix", encode_member(e.members()[k])}});
  }
  return {{"schema_version", kEnsembleSchemaVersion},
          {"kind", kind},
          {"dimension", e.dimension()},
          {"members", std::move(members)}};
}

struct Header {
  std::string kind;
  int dimension;
};

Header read_header(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ensemble JSON must be an object");
  if (j.value("schema_version", 0) != kEnsembleSchemaVersion) {
    throw std::invalid_argument("ensemble JSON: unsupported schema_version");
  }
  Header h{j.at("kind").get<std::string>(), j.at("dimension").get<int>()};
  if (h.dimension < 1) throw std::invalid_argument("ensemble JSON: dimension must be >= 1");
  if (!j.at("members").is_array()) throw std::invalid_argument("ensemble JSON: members must be an array");
  return h;
}

}  // namespace

json to_json(const StateEnsemble& e) {
  return encode(e, "state", [](const PureState& s) { return encode_matrix(s.amplitudes()); });
}

json to_json(const UnitaryEnsemble& e) {
  return encode(e, "unitary", [](const UnitaryMatrix& u) { return encode_matrix(u.entries()); });
}

StateEnsemble state_ensemble_from_json(const json& j) {
  const auto h = read_header(j);
  if (h.kind != "state") throw std::invalid_argument("ensemble JSON: expected kind 'state'");
  std::vector<PureState> members;
  std::vector<double> weights;
  for (const auto& m : j.at("members")) {
    weights.push_back(decode_number(m.at("weight")));
    ComplexMatrix column = decode_matrix(m.at("matrix"), h.dimension, 1);
    members.emplace_back(ComplexVector(column.col(0)));
  }
  return StateEnsemble(std::move(members), std::move(weights));
}

UnitaryEnsemble unitary_ensemble_from_json(const json& j) {
  const auto h = read_header(j);
  if (h.kind != "unitary") throw std::invalid_argument("ensemble JSON: expected kind 'unitary'");
  std::vector<UnitaryMatrix> members;
  std::vector<double> weights;
  for (const auto& m : j.at("members")) {
    weights.push_back(decode_number(m.at("weight")));
    members.emplace_back(decode_matrix(m.at("matrix"), h.dimension, h.dimension));
  }
  return UnitaryEnsemble(std::move(members), std::move(weights));
}

AnyEnsemble ensemble_from_json(const json& j) {
  const auto h = read_header(j);
  if (h.kind == "state") return state_ensemble_from_json(j);
  if (h.kind == "unitary") return unitary_ensemble_from_json(j);
  throw std::invalid_argument("ensemble JSON: unknown kind '" + h.kind + "'");
}

}  // namespace entdesign
