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

#include "entdesign/ensembles.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "entdesign/permgroup.hpp"

namespace entdesign {

namespace {

void check_weights(const std::vector<double>& weights, std::size_t members, const char* what) {
  if (members == 0) throw std::invalid_argument(std::string(what) + " must not be empty");
  if (weights.size() != members) throw std::invalid_argument(std::string(what) + ": one weight per member required");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument(std::string(what) + ": weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument(std::string(what) + ": weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

std::vector<double> uniform_weights(std::size_t n) {
  return std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
}

}  // namespace

StateEnsemble::StateEnsemble(std::vector<PureState> members, std::vector<double> weights)
    : members_(std::move(members)), weights_(std::move(weights)) {
  check_weights(weights_, members_.size(), "state ensemble");
  for (const auto& m : members_) {
    if (m.dimension() != members_.front().dimension()) throw std::invalid_argument("state ensemble: mixed dimensions");
  }
}

StateEnsemble StateEnsemble::uniform(std::vector<PureState> members) {
  auto w = uniform_weights(members.size());
  return StateEnsemble(std::move(members), std::move(w));
}

UnitaryEnsemble::UnitaryEnsemble(std::vector<UnitaryMatrix> members, std::vector<double> weights)
    : members_(std::move(members)), weights_(std::move(weights)) {
  check_weights(weights_, members_.size(), "unitary ensemble");
  for (const auto& m : members_) {
    if (m.dimension() != members_.front().dimension()) throw std::invalid_argument("unitary ensemble: mixed dimensions");
  }
}

UnitaryEnsemble UnitaryEnsemble::uniform(std::vector<UnitaryMatrix> members) {
  auto w = uniform_weights(members.size());
  return UnitaryEnsemble(std::move(members), std::move(w));
}

LocalUnitaryOrbit::LocalUnitaryOrbit(PureState base, StatePartition partition)
    : base_(std::move(base)), partition_(partition) {
  partition_.validate();
  if (base_.dimension() != partition_.total()) {
    throw std::invalid_argument("orbit base state dimension does not match the partition");
  }
}

PureState LocalUnitaryOrbit::sample(RandomStream& rng) const {
  const int d_A = partition_.d_A;
  const int d_B = partition_.d_B;
  // ψ[a d_B + b] = Ψ(a, b);  (U_A ⊗ U_B) ψ  <->  U_A Ψ U_Bᵀ
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> psi(
      base_.amplitudes().data(), d_A, d_B);
  const auto u_a = sample_haar_unitary(d_A, rng);
  const auto u_b = sample_haar_unitary(d_B, rng);
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rotated =
      u_a.entries() * psi * u_b.entries().transpose();
  ComplexVector out = Eigen::Map<const ComplexVector>(rotated.data(), rotated.size());
  out.normalize();
  return PureState(std::move(out), {d_A, d_B});
}

GapSpectrum gap2_spectrum(int d_A, int d_B) {
  if (d_A < 1 || d_B < 1) throw std::invalid_argument("gap design dimensions must be >= 1");
  if (d_A > d_B) {
    throw std::domain_error("gap 2-design needs d_A <= d_B so the Schmidt rank fits (got d_A=" + std::to_string(d_A) +
                            ", d_B=" + std::to_string(d_B) + ")");
  }
  const double n = static_cast<double>(d_A) * d_B + 1.0;
  const double root = std::sqrt((d_A + 1.0) * n);
  GapSpectrum s;
  s.lambda1 = (n + (d_A - 1.0) * root) / (d_A * n);
  s.lambda2 = (n - root) / (d_A * n);
  s.multiplicity = d_A - 1;
  if (s.lambda2 < 0.0) throw std::domain_error("gap 2-design spectrum has lambda2 < 0");
  return s;
}

PureState gap2_design_state(int d_A, int d_B) {
  const auto s = gap2_spectrum(d_A, d_B);
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d_A) * d_B);
  for (int i = 0; i < d_A; ++i) v(i * d_B + i) = std::sqrt(i == 0 ? s.lambda1 : s.lambda2);
  v.normalize();
  return PureState(std::move(v), {d_A, d_B});
}

namespace {

// a + b √radicand with rational a, b.
struct QuadraticSurd {
  Rational a;
  Rational b;
  Integer radicand;

  QuadraticSurd squared() const { return {a * a + b * b * radicand, 2 * a * b, radicand}; }
  QuadraticSurd operator+(const QuadraticSurd& o) const { return {a + o.a, b + o.b, radicand}; }
  QuadraticSurd scaled(const Rational& k) const { return {a * k, b * k, radicand}; }
};

}  // namespace

Rational gap2_purity_exact(int d_A, int d_B) {
  gap2_spectrum(d_A, d_B);  // regime checks
  const Integer n = Integer(d_A) * d_B + 1;
  const Integer m = (Integer(d_A) + 1) * n;
  const Rational denom(Integer(d_A) * n);
  const QuadraticSurd lambda1{Rational(n) / denom, Rational(d_A - 1) / denom, m};
  const QuadraticSurd lambda2{Rational(n) / denom, Rational(-1) / denom, m};
  QuadraticSurd purity = lambda1.squared() + lambda2.squared().scaled(Rational(d_A - 1));
  purity.a.canonicalize();
  purity.b.canonicalize();
  if (purity.b != 0) throw std::logic_error("gap spectrum purity has a surviving surd term");
  return purity.a;
}

double gap_renyi_upper_bound(int d_A, double r, int alpha) {
  if (alpha <= 2) throw std::invalid_argument("the gap bound is only asserted for alpha > 2");
  if (!(r >= 1.0)) throw std::invalid_argument("gap bound needs r >= 1");
  if (d_A < 1) throw std::invalid_argument("gap bound needs d_A >= 1");
  const double a = alpha;
  return a / (2.0 * (a - 1.0)) * (std::log2(static_cast<double>(d_A)) + std::log2(r));
}

namespace {

std::array<ComplexMatrix, 4> single_paulis() {
  const Complex i(0.0, 1.0);
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {id, x, y, z};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

ComplexMatrix canonical_phase(ComplexMatrix m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double mag = std::abs(m(i, j));
      if (mag > 1e-9) return m * (std::conj(m(i, j)) / mag);
    }
  }
  return m;
}

std::vector<long long> rounded_key(const ComplexMatrix& m) {
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      key.push_back(std::llround(m(i, j).real() * 1e8));
      key.push_back(std::llround(m(i, j).imag() * 1e8));
    }
  }
  return key;
}

}  // namespace

UnitaryEnsemble pauli_group(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5) throw std::length_error("pauli_group supports 1 <= n <= 5 qubits");
  const auto paulis = single_paulis();
  std::vector<ComplexMatrix> current{ComplexMatrix::Identity(1, 1)};
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<ComplexMatrix> next;
    next.reserve(current.size() * 4);
    for (const auto& m : current) {
      for (const auto& p : paulis) next.push_back(kron(m, p));
    }
    current = std::move(next);
  }
  std::vector<UnitaryMatrix> members;
  members.reserve(current.size());
  for (auto& m : current) members.emplace_back(std::move(m));
  return UnitaryEnsemble::uniform(std::move(members));
}

UnitaryEnsemble single_qubit_clifford() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix hadamard(2, 2), phase(2, 2);
  hadamard << h, h, h, -h;
  phase << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  const std::array<ComplexMatrix, 2> generators{hadamard, phase};

  std::vector<ComplexMatrix> found;
  std::set<std::vector<long long>> seen;
  std::deque<ComplexMatrix> frontier;
  const ComplexMatrix start = ComplexMatrix::Identity(2, 2);
  seen.insert(rounded_key(start));
  found.push_back(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const ComplexMatrix current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      ComplexMatrix next = canonical_phase(g * current);
      if (seen.insert(rounded_key(next)).second) {
        found.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  if (found.size() != 24) throw std::logic_error("Clifford closure produced " + std::to_string(found.size()) + " elements");
  std::vector<UnitaryMatrix> members;
  for (auto& m : found) members.emplace_back(std::move(m));
  return UnitaryEnsemble::uniform(std::move(members));
}

StateEnsemble single_qubit_stabilizer_states() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  std::vector<PureState> states;
  auto add = [&](Complex a, Complex b) {
    ComplexVector v(2);
    v << a, b;
    states.emplace_back(std::move(v));
  };
  add(1.0, 0.0);
  add(0.0, 1.0);
  add(h, h);
  add(h, -h);
  add(h, h * i);
  add(h, -h * i);
  return StateEnsemble::uniform(std::move(states));
}

MomentDeviation moment_deviation(const StateEnsemble& e, const StatePartition& p, int alpha) {
  p.validate();
  if (e.dimension() != p.total()) throw std::invalid_argument("ensemble dimension does not match the partition");
  MomentDeviation out;
  out.n_samples = static_cast<std::int64_t>(e.size());
  if (alpha == 1) {
    out.vacuous = true;
    return out;
  }
  double avg = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const PureState psi(e.members()[k].amplitudes(), {p.d_A, p.d_B});
    avg += e.weights()[k] * trace_power(reduced_density(psi, {0}), alpha);
  }
  out.deviation = avg - to_double(haar_state_moment(p, alpha).value);
  return out;
}

MomentDeviation moment_deviation(const LocalUnitaryOrbit& orbit, int alpha, std::int64_t n, const RandomStream& rng) {
  MomentDeviation out;
  out.n_samples = n;
  if (alpha == 1) {
    out.vacuous = true;
    return out;
  }
  const auto estimate = monte_carlo(n, rng, [&](RandomStream& s) {
    return trace_power(reduced_density(orbit.sample(s), {0}), alpha);
  });
  out.deviation = estimate.mean - to_double(haar_state_moment(orbit.partition(), alpha).value);
  out.std_error = estimate.std_error;
  return out;
}

MomentDeviation moment_deviation(const UnitaryEnsemble& e, const ChoiPartitionSpec& p, int alpha) {
  p.validate();
  if (e.dimension() != p.total()) throw std::invalid_argument("ensemble dimension does not match the partition");
  MomentDeviation out;
  out.n_samples = static_cast<std::int64_t>(e.size());
  double avg = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    avg += e.weights()[k] * trace_power(reduced_density(choi_state(e.members()[k], p), {0, 2}), alpha);
  }
  out.deviation = avg - to_double(haar_choi_moment(p, alpha).value);
  return out;
}

double frame_operator_distance(const StateEnsemble& e, int alpha) {
  if (alpha < 1) throw std::invalid_argument("frame operator order must be >= 1");
  const int d = e.dimension();
  double size_estimate = std::pow(static_cast<double>(d), alpha);
  if (size_estimate > kFrameOperatorCap) {
    throw std::length_error("frame operator of size d^alpha = " + std::to_string(static_cast<long long>(size_estimate)) +
                            " exceeds the cap " + std::to_string(kFrameOperatorCap));
  }
  const int big = static_cast<int>(size_estimate);

  ComplexMatrix frame = ComplexMatrix::Zero(big, big);
  for (std::size_t k = 0; k < e.size(); ++k) {
    ComplexVector v = e.members()[k].amplitudes();
    for (int a = 1; a < alpha; ++a) {
      ComplexVector next(v.size() * d);
      for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * d, d) = v(i) * e.members()[k].amplitudes();
      v = std::move(next);
    }
    frame += e.weights()[k] * (v * v.adjoint());
  }
  const double sym_dim = to_double(Rational(binomial(Integer(d + alpha - 1), static_cast<unsigned long>(alpha))));
  frame *= sym_dim;

  // Projector onto the symmetric subspace: average of the α! factor permutations.
  const auto perms = enumerate_group(alpha);
  const double inv_order = 1.0 / static_cast<double>(perms.size());
  std::vector<int> digits(static_cast<std::size_t>(alpha));
  for (int idx = 0; idx < big; ++idx) {
    int rem = idx;
    for (int f = alpha - 1; f >= 0; --f) {
      digits[static_cast<std::size_t>(f)] = rem % d;
      rem /= d;
    }
    for (const auto& pi : perms) {
      int target = 0;
      for (int f = 0; f < alpha; ++f) target = target * d + digits[static_cast<std::size_t>(pi(f))];
      frame(target, idx) -= inv_order;
    }
  }
  double norm = 0.0;
  for (double l : hermitian_eigenvalues(frame)) norm += std::abs(l);
  return norm;
}

double frame_potential(const UnitaryEnsemble& e, int t) {
  if (t < 1) throw std::invalid_argument("frame potential order must be >= 1");
  if (e.size() > kFramePotentialCap) {
    throw std::length_error("frame potential over " + std::to_string(e.size()) + " members exceeds the cap " +
                            std::to_string(kFramePotentialCap));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      const Complex overlap = (e.members()[i].entries().conjugate().array() * e.members()[j].entries().array()).sum();
      total += e.weights()[i] * e.weights()[j] * std::pow(std::norm(overlap), t);
    }
  }
  return total;
}

McEstimate haar_frame_potential(int d, int t, std::int64_t n, const RandomStream& rng) {
  if (t < 1) throw std::invalid_argument("frame potential order must be >= 1");
  return monte_carlo(n, rng, [&](RandomStream& s) {
    return std::pow(std::norm(sample_haar_unitary(d, s).entries().trace()), t);
  });
}

}  // namespace entdesign
