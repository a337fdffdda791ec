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

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "entdesign/exact.hpp"
#include "entdesign/permgroup.hpp"

namespace entdesign {

/// Largest α for the (α!)²-term Choi double sum.
inline constexpr int kChoiCap = 6;

/// Bipartition H_A ⊗ H_B of a pure-state register.
struct StatePartition {
  int d_A = 1;
  int d_B = 1;

  int total() const { return d_A * d_B; }
  void validate() const;
  friend bool operator==(const StatePartition&, const StatePartition&) = default;
};

/// Input split A ⊗ B and output split C ⊗ D of a unitary channel on d = d_A d_B = d_C d_D.
struct ChoiPartitionSpec {
  int d_A = 1;
  int d_B = 1;
  int d_C = 1;
  int d_D = 1;

  int total() const { return d_A * d_B; }
  void validate() const;
  friend bool operator==(const ChoiPartitionSpec&, const ChoiPartitionSpec&) = default;
};

using PartitionContext = std::variant<StatePartition, ChoiPartitionSpec>;

struct MomentResult {
  Rational value;
  int alpha = 1;
  PartitionContext context;
};

/// Exact Haar average of tr ρ_A^α over random pure states:
///   (α! D_[α])^{-1} Σ_{σ ∈ S_α} d_A^{ξ(στ)} d_B^{ξ(σ)},  D_[α] = C(d_A d_B + α - 1, α).
MomentResult haar_state_moment(const StatePartition& p, int alpha, int cap = kEnumerationCap);

/// Exact Haar average of tr ρ_AC^α over Choi states of random unitaries:
///   d^{-α} Σ_{σ,γ} d_A^{ξ(στ)} d_B^{ξ(σ)} d_C^{ξ(γτ)} d_D^{ξ(γ)} Wg(d, σγ⁻¹).
/// Requires d >= α and α <= cap.
MomentResult haar_choi_moment(const ChoiPartitionSpec& p, int alpha, int cap = kChoiCap);

/// Leading-order equal-partition asymptotics Cat_α d_A^{-(α-1)} (remainder
/// O(d_A^{-(α+1)}) omitted).
double state_moment_asymptotic(int d_A, int alpha);

/// Cat_α = C(2α, α) / (α + 1).
Integer catalan(int alpha);

/// Jensen lower bound on the design-averaged Rényi-α entropy, in bits:
/// (1 - α)^{-1} log2(moment). Requires α >= 2.
double design_renyi_lower_bound(const MomentResult& m);
double renyi_bits_from_moment(const Rational& moment, int alpha);

enum class Theorem { T1, T2a, T2b, T3, T4, T5, T6 };

std::string_view theorem_name(Theorem id);
Theorem parse_theorem(std::string_view name);

/// Inputs for theorem_bound. Which fields are needed depends on the theorem:
///   T1, T2a, T2b : d_A, d_B, alpha (T2b also field_constant)
///   T3           : d_A, d_B, a
///   T4, T5       : d_A, d_B, d_C, d_D, alpha
///   T6           : d (or the four Choi dimensions), a
struct BoundParams {
  std::optional<int> d_A, d_B, d_C, d_D, d;
  std::optional<int> alpha;
  std::optional<double> a;
  int field_constant = 2;  // 2 for complex Hilbert spaces, 1 for real
};

struct BoundResult {
  Theorem theorem = Theorem::T1;
  double bound_bits = 0.0;
  bool valid = false;
  bool asymptotic = false;
  /// Weaker closed form that the theorem also states, when there is one.
  std::optional<double> relaxed_bits;
  /// α actually used (derived from a for T3 and T6).
  int alpha = 0;
  std::string constraint_report;
};

/// Evaluates the right-hand side of a theorem in bits and checks its
/// hypotheses. Throws std::invalid_argument when required params are missing
/// or malformed.
BoundResult theorem_bound(Theorem id, const BoundParams& params);

}  // namespace entdesign
