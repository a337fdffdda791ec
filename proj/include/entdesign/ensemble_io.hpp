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

#include <string>
#include <variant>

#include "json.hpp"

#include "entdesign/ensembles.hpp"

namespace entdesign {

/// JSON exchange format for finite ensembles:
///
///   {
///     "schema_version": 1,
///     "kind": "state" | "unitary",
///     "dimension": d,
///     "members": [
///       {"weight": "1/6", "matrix": [[["re", "im"], ...], ...]}, ...
///     ]
///   }
///
/// Matrices are row-major; a state is a d x 1 column. Every number is a
/// string holding either a decimal literal or an exact "p/q" rational.
/// Weights may also be plain JSON numbers on input.
inline constexpr int kEnsembleSchemaVersion = 1;

nlohmann::json to_json(const StateEnsemble& e);
nlohmann::json to_json(const UnitaryEnsemble& e);

StateEnsemble state_ensemble_from_json(const nlohmann::json& j);
UnitaryEnsemble unitary_ensemble_from_json(const nlohmann::json& j);

using AnyEnsemble = std::variant<StateEnsemble, UnitaryEnsemble>;
AnyEnsemble ensemble_from_json(const nlohmann::json& j);

}  // namespace entdesign
