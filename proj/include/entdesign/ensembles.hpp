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
#include <vector>

#include "entdesign/exact.hpp"
#include "entdesign/moments.hpp"
#include "entdesign/quantum.hpp"
#include "entdesign/sampling.hpp"

namespace entdesign {

/// Finite weighted list of pure states of a common dimension; weights are
/// non-negative and sum to 1 (to 1e-12).
class StateEnsemble {
 public:
  StateEnsemble(std::vector<PureState> members, std::vector<double> weights);
  static StateEnsemble uniform(std::vector<PureState> members);

  const std::vector<PureState>& members() const { return members_; }
  const std::vector<double>& weights() const { return weights_; }
  int dimension() const { return members_.front().dimension(); }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<PureState> members_;
  std::vector<double> weights_;
};

/// Finite weighted list of unitaries of a common dimension.
class UnitaryEnsemble {
 public:
  UnitaryEnsemble(std::vector<UnitaryMatrix> members, std::vector<double> weights);
  static UnitaryEnsemble uniform(std::vector<UnitaryMatrix> members);

  const std::vector<UnitaryMatrix>& members() const { return members_; }
  const std::vector<double>& weights() const { return weights_; }
  int dimension() const { return members_.front().dimension(); }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<UnitaryMatrix> members_;
  std::vector<double> weights_;
};

/// Orbit of a base state under Haar-random local unitaries U_A ⊗ U_B,
/// represented by its generator rather than materialized.
class LocalUnitaryOrbit {
 public:
  LocalUnitaryOrbit(PureState base, StatePartition partition);

  const PureState& base() const { return base_; }
  const StatePartition& partition() const { return partition_; }
  PureState sample(RandomStream& rng) const;

 private:
  PureState base_;
  StatePartition partition_;
};

/// Schmidt spectrum of the gap 2-design base state: one eigenvalue λ1 and
/// d_A - 1 copies of λ2.
struct GapSpectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int multiplicity = 0;  // of lambda2
};

/// Requires 1 <= d_A <= d_B; throws std::domain_error if λ2 < 0.
GapSpectrum gap2_spectrum(int d_A, int d_B);

/// Σ_i √λ_i |i⟩_A |i⟩_B with the gap spectrum; dims {d_A, d_B}. Its local
/// unitary orbit is a projective 2-design.
PureState gap2_design_state(int d_A, int d_B);

/// tr ρ_A² of the gap state, computed symbolically in Q(√M),
/// M = (d_A + 1)(d_A d_B + 1). Throws if the √M part fails to cancel.
Rational gap2_purity_exact(int d_A, int d_B);

/// Upper bound α / (2(α - 1)) · (log2 d_A + log2 r) on the Rényi-α entanglement
/// of the gap state when d_B / d_A <= r. Requires α >= 3 and r >= 1.
double gap_renyi_upper_bound(int d_A, double r, int alpha);

/// The 4^n n-qubit Pauli operators (n <= 5), uniform weights.
UnitaryEnsemble pauli_group(int n_qubits);

/// The 24 single-qubit Cliffords modulo phase, first nonzero entry real
/// positive, uniform weights.
UnitaryEnsemble single_qubit_clifford();

/// The six single-qubit stabilizer states, uniform weights.
StateEnsemble single_qubit_stabilizer_states();

/// Ensemble average of tr ρ^α minus its Haar value. Only a necessary
/// condition for being an α-design; std_error is 0 for finite ensembles.
struct MomentDeviation {
  double deviation = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  bool vacuous = false;  // α = 1 state moments are identically 1
};

MomentDeviation moment_deviation(const StateEnsemble& e, const StatePartition& p, int alpha);
MomentDeviation moment_deviation(const LocalUnitaryOrbit& orbit, int alpha, std::int64_t n, const RandomStream& rng);
MomentDeviation moment_deviation(const UnitaryEnsemble& e, const ChoiPartitionSpec& p, int alpha);

/// Largest d^α for which the dense frame operator is assembled.
inline constexpr int kFrameOperatorCap = 4096;

/// || D_[α] E |ψ⟩⟨ψ|^{⊗α} - P_sym ||_1, zero iff the ensemble is an α-design.
double frame_operator_distance(const StateEnsemble& e, int alpha);

/// Largest ensemble size for the pairwise frame potential sum.
inline constexpr std::size_t kFramePotentialCap = 4096;

/// F_t = E_{U,V} |tr(U†V)|^{2t}.
double frame_potential(const UnitaryEnsemble& e, int t);

/// Haar value of F_t estimated as E |tr W|^{2t} over Haar W (by invariance).
McEstimate haar_frame_potential(int d, int t, std::int64_t n, const RandomStream& rng);

}  // namespace entdesign
