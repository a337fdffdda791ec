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

#include <functional>
#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "entdesign/exact.hpp"
#include "entdesign/permgroup.hpp"

namespace entdesign {

/// Largest α for which the α! x α! Gram matrix is materialized.
inline constexpr int kGramCap = 6;

/// Receives regime warnings (e.g. d < α). Defaults to writing on stderr.
using WarningHandler = std::function<void(std::string_view)>;
void set_warning_handler(WarningHandler handler);
void emit_warning(std::string_view message);

/// Unitary Weingarten function Wg(d, ·) on S_α, one exact value per cycle type.
///
///   Wg(d, σ) = (α!)^{-2} Σ_{λ ⊢ α, rows(λ) <= d} χ^λ(1)² χ^λ(σ) / s_λ(1^d)
///
/// Restricting λ to at most d rows gives the pseudo-inverse of the Gram
/// matrix when d < α; a warning is emitted in that regime.
class WeingartenTable {
 public:
  WeingartenTable(int d, int alpha);

  int dimension() const { return dimension_; }
  int order() const { return order_; }
  bool pseudo_inverse_regime() const { return dimension_ < order_; }

  const Rational& value(const IntegerPartition& cycle_type) const;
  const Rational& value(const Permutation& sigma) const;
  const std::map<IntegerPartition, Rational>& values() const { return values_; }

 private:
  int dimension_;
  int order_;
  std::map<IntegerPartition, Rational> values_;
};

/// Shared immutable table for (d, α), built once per process.
std::shared_ptr<const WeingartenTable> weingarten_table(int d, int alpha);

Rational weingarten(int d, const Permutation& sigma);
Rational weingarten(int d, const IntegerPartition& cycle_type);

/// Gram matrix G(σ, γ) = d^{ξ(σ⁻¹γ)} over S_α in lexicographic element order.
struct GramMatrix {
  int alpha = 0;
  std::vector<Permutation> elements;
  std::vector<Integer> entries;  // row-major, elements.size()² entries

  const Integer& at(std::size_t row, std::size_t col) const { return entries[row * elements.size() + col]; }
};

GramMatrix gram_matrix(int d, int alpha, int cap = kGramCap);

/// Exact check of Σ_γ Wg(d, σγ⁻¹) d^{ξ(γρ⁻¹)} = δ_{σρ} for every σ, ρ.
/// Requires d >= α (the Gram matrix is singular otherwise) and α <= cap.
bool verify_wg_inverse(int d, int alpha, int cap = kGramCap);

}  // namespace entdesign
