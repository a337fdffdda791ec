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

#include <Eigen/Dense>

#include <complex>
#include <variant>
#include <vector>

#include "entdesign/moments.hpp"

namespace entdesign {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Subsystem dimensions of a register, most significant factor first:
/// for dims {d_0, d_1, ...} the flat index is ((i_0 d_1 + i_1) d_2 + i_2) ...
using Dims = std::vector<int>;

int product(const Dims& dims);

/// Normalized state vector with factorization metadata.
class PureState {
 public:
  /// Throws if the norm deviates from 1 by more than 1e-12 or dims do not
  /// multiply to the vector length. Empty dims means a single factor.
  PureState(ComplexVector amplitudes, Dims dims = {});

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  int dimension() const { return static_cast<int>(amplitudes_.size()); }

 private:
  ComplexVector amplitudes_;
  Dims dims_;
};

/// Hermitian, unit-trace matrix. Construction checks Hermiticity and trace
/// to 1e-12; positivity is checked against a -1e-10 floor wherever the
/// spectrum is computed.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix entries, Dims dims = {});

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int d);

  const ComplexMatrix& entries() const { return entries_; }
  const Dims& dims() const { return dims_; }
  int dimension() const { return static_cast<int>(entries_.rows()); }

 private:
  ComplexMatrix entries_;
  Dims dims_;
};

/// U†U = I to 1e-10 in max-entry norm.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix entries);

  static UnitaryMatrix identity(int d);
  /// Exchange of two d_sub-dimensional factors: |a⟩|b⟩ -> |b⟩|a⟩.
  static UnitaryMatrix swap(int d_sub);

  const ComplexMatrix& entries() const { return entries_; }
  int dimension() const { return static_cast<int>(entries_.rows()); }

 private:
  ComplexMatrix entries_;
};

DensityMatrix tensor(const DensityMatrix& lhs, const DensityMatrix& rhs);

/// |U⟩ = d^{-1/2} Σ_{i,j} U_{ji} |i⟩_in |j⟩_out, flat index i·d + j.
PureState choi_state(const UnitaryMatrix& u);
/// Same state with dims {d_A, d_B, d_C, d_D}.
PureState choi_state(const UnitaryMatrix& u, const ChoiPartitionSpec& spec);

/// Partial trace keeping the listed subsystems (indices into dims, any order;
/// the result keeps them in ascending order).
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);
DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep);

/// tr ρ^α by repeated multiplication.
double trace_power(const DensityMatrix& rho, int alpha);

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-11;
  int max_sweeps = 100;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const JacobiOptions& options = {});

/// Spectrum of ρ, validated against the -1e-10 floor and clipped to [0, 1].
std::vector<double> spectrum(const DensityMatrix& rho, const JacobiOptions& options = {});

/// (1 - α)^{-1} log2 tr ρ^α, α >= 2.
double renyi_entropy(const DensityMatrix& rho, int alpha);

/// Unified (α, s) entropy ((tr ρ^α)^s - 1) / (s (1 - α)) in natural units;
/// s -> 0 is the Rényi entropy in nats, s = 1 the Tsallis entropy.
double unified_entropy(const DensityMatrix& rho, int alpha, double s);
double tsallis_entropy(const DensityMatrix& rho, int alpha);

/// Selects the characteristic function for generalized_entropy.
struct Renyi {};
struct Tsallis {};
struct Unified {
  double s = 1.0;
};
using EntropyFamily = std::variant<Renyi, Tsallis, Unified>;

/// Rényi results are in bits; Tsallis and unified values are dimensionless
/// (natural scaling).
double generalized_entropy(const DensityMatrix& rho, int alpha, const EntropyFamily& family = Renyi{});

struct PowerIterationOptions {
  /// Convergence when ||ρv - θv|| <= tolerance · θ (θ the Rayleigh quotient).
  double relative_tolerance = 1e-10;
  int max_iterations = 200000;
};

/// -log2 λ_max by power iteration.
double min_entropy(const DensityMatrix& rho, const PowerIterationOptions& options = {});
double largest_eigenvalue(const DensityMatrix& rho, const PowerIterationOptions& options = {});

/// -Σ λ log2 λ from the Jacobi spectrum; eigenvalues below 1e-14 contribute 0.
double von_neumann(const DensityMatrix& rho);

struct VonNeumannOrder {};
struct MinOrder {};
/// Entropy selector shared by the tripartite information and the Monte Carlo
/// averages: an integer Rényi order, the von Neumann entropy, or the min entropy.
using EntropyOrder = std::variant<int, VonNeumannOrder, MinOrder>;

double entropy_bits(const DensityMatrix& rho, const EntropyOrder& order);

struct TripartiteResult {
  /// I(A:CD) - I(A:C) - I(A:D) evaluated from every marginal.
  double direct = 0.0;
  /// S(AC) + S(AD) - log2 d, exact for the von Neumann entropy because the
  /// single-region marginals of a Choi state are maximally mixed.
  double shortcut = 0.0;
};

/// Negative tripartite information of the Choi state of U for the given
/// split, with the chosen entropy. No sign is asserted for Rényi orders.
TripartiteResult negative_tripartite(const UnitaryMatrix& u, const ChoiPartitionSpec& spec, const EntropyOrder& order);

}  // namespace entdesign
