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

#include "entdesign/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace entdesign {

int product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

namespace {

Dims resolve_dims(Dims dims, Eigen::Index size, const char* what) {
  if (dims.empty()) return {static_cast<int>(size)};
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument(std::string(what) + ": subsystem dimensions must be >= 1");
  }
  if (product(dims) != size) {
    throw std::invalid_argument(std::string(what) + ": subsystem dimensions multiply to " +
                                std::to_string(product(dims)) + " but the register has size " + std::to_string(size));
  }
  return dims;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw std::invalid_argument("pure state must have dimension >= 1");
  dims_ = resolve_dims(std::move(dims), amplitudes_.size(), "pure state");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw std::invalid_argument("pure state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix entries, Dims dims) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and non-empty");
  }
  dims_ = resolve_dims(std::move(dims), entries_.rows(), "density matrix");
  const double asymmetry = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12) {
    throw std::invalid_argument("density matrix is not Hermitian (max deviation " + std::to_string(asymmetry) + ")");
  }
  const Complex trace = entries_.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(trace.real()) + ", expected 1");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  ComplexMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(std::move(rho), psi.dims());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) throw std::invalid_argument("unitary must be square");
  const auto n = entries_.rows();
  const double defect = (entries_.adjoint() * entries_ - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) throw std::invalid_argument("matrix is not unitary (max |U^dag U - I| = " + std::to_string(defect) + ")");
}

UnitaryMatrix UnitaryMatrix::identity(int d) { return UnitaryMatrix(ComplexMatrix::Identity(d, d)); }

UnitaryMatrix UnitaryMatrix::swap(int d_sub) {
  const int d = d_sub * d_sub;
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d_sub; ++a) {
    for (int b = 0; b < d_sub; ++b) u(b * d_sub + a, a * d_sub + b) = 1.0;
  }
  return UnitaryMatrix(std::move(u));
}

DensityMatrix tensor(const DensityMatrix& lhs, const DensityMatrix& rhs) {
  const auto m = lhs.dimension();
  const auto n = rhs.dimension();
  ComplexMatrix out(m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out.block(i * n, j * n, n, n) = lhs.entries()(i, j) * rhs.entries();
  }
  Dims dims = lhs.dims();
  dims.insert(dims.end(), rhs.dims().begin(), rhs.dims().end());
  return DensityMatrix(std::move(out), std::move(dims));
}

PureState choi_state(const UnitaryMatrix& u) {
  const int d = u.dimension();
  ComplexVector amps(static_cast<Eigen::Index>(d) * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) amps(i * d + j) = scale * u.entries()(j, i);
  }
  // Re-normalize away rounding so the 1e-12 invariant holds for large d.
  amps /= amps.norm();
  return PureState(std::move(amps), {d, d});
}

PureState choi_state(const UnitaryMatrix& u, const ChoiPartitionSpec& spec) {
  spec.validate();
  if (spec.total() != u.dimension()) {
    throw std::invalid_argument("Choi partition dimension " + std::to_string(spec.total()) +
                                " does not match unitary dimension " + std::to_string(u.dimension()));
  }
  auto state = choi_state(u);
  return PureState(state.amplitudes(), {spec.d_A, spec.d_B, spec.d_C, spec.d_D});
}

namespace {

struct SplitIndex {
  Dims kept_dims;
  int kept_size = 1;
  int traced_size = 1;
  // flat[k * traced_size + t] = full register index
  std::vector<int> flat;
};

SplitIndex split_index(const Dims& dims, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs at least one kept subsystem");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("partial trace: duplicate subsystem index");
  }
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial trace: subsystem index out of range");
    kept[static_cast<std::size_t>(k)] = true;
  }
  SplitIndex s;
  for (int i = 0; i < n; ++i) {
    if (kept[static_cast<std::size_t>(i)]) {
      s.kept_dims.push_back(dims[static_cast<std::size_t>(i)]);
      s.kept_size *= dims[static_cast<std::size_t>(i)];
    } else {
      s.traced_size *= dims[static_cast<std::size_t>(i)];
    }
  }
  const int total = product(dims);
  s.flat.assign(static_cast<std::size_t>(total), 0);
  std::vector<int> digits(dims.size(), 0);
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx;
    for (int i = n - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = rem % dims[static_cast<std::size_t>(i)];
      rem /= dims[static_cast<std::size_t>(i)];
    }
    int k = 0;
    int t = 0;
    for (int i = 0; i < n; ++i) {
      const int d = dims[static_cast<std::size_t>(i)];
      if (kept[static_cast<std::size_t>(i)]) {
        k = k * d + digits[static_cast<std::size_t>(i)];
      } else {
        t = t * d + digits[static_cast<std::size_t>(i)];
      }
    }
    s.flat[static_cast<std::size_t>(k) * static_cast<std::size_t>(s.traced_size) + static_cast<std::size_t>(t)] = idx;
  }
  return s;
}

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
  const auto s = split_index(psi.dims(), keep);
  ComplexMatrix m(s.kept_size, s.traced_size);
  for (int k = 0; k < s.kept_size; ++k) {
    for (int t = 0; t < s.traced_size; ++t) {
      m(k, t) = psi.amplitudes()(s.flat[static_cast<std::size_t>(k * s.traced_size + t)]);
    }
  }
  ComplexMatrix rho = hermitize(m * m.adjoint());
  const Complex tr = rho.trace();
  rho /= tr.real();
  return DensityMatrix(std::move(rho), s.kept_dims);
}

DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep) {
  const auto s = split_index(rho.dims(), keep);
  ComplexMatrix out = ComplexMatrix::Zero(s.kept_size, s.kept_size);
  const auto at = [&](int k, int t) { return s.flat[static_cast<std::size_t>(k * s.traced_size + t)]; };
  for (int k = 0; k < s.kept_size; ++k) {
    for (int l = 0; l < s.kept_size; ++l) {
      Complex acc = 0.0;
      for (int t = 0; t < s.traced_size; ++t) acc += rho.entries()(at(k, t), at(l, t));
      out(k, l) = acc;
    }
  }
  out = hermitize(out);
  const Complex tr = out.trace();
  out /= tr.real();
  return DensityMatrix(std::move(out), s.kept_dims);
}

double trace_power(const DensityMatrix& rho, int alpha) {
  if (alpha < 1) throw std::invalid_argument("trace power order must be >= 1");
  const ComplexMatrix& m = rho.entries();
  if (alpha == 1) return m.trace().real();
  // tr ρ^α = tr(ρ^h ρ^{α-h}) with h = floor(α/2); for Hermitian A, B
  // tr(AB) = Σ_ij A_ij conj(B_ij).
  const int half = alpha / 2;
  ComplexMatrix low = m;
  for (int k = 1; k < half; ++k) low = low * m;
  const ComplexMatrix high = (alpha % 2 == 0) ? low : ComplexMatrix(low * m);
  return (low.array() * high.array().conjugate()).sum().real();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const JacobiOptions& options) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  ComplexMatrix a = hermitize(h);
  const Eigen::Index n = a.rows();
  const double scale = std::max(1.0, a.norm());
  auto off_norm = [&] {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        if (p != q) sum += std::norm(a(p, q));
      }
    }
    return std::sqrt(sum);
  };

  int sweep = 0;
  double off = off_norm();
  while (off > options.off_diagonal_tolerance * scale) {
    if (sweep++ >= options.max_sweeps) {
      std::ostringstream os;
      os << "Jacobi eigensolver did not converge after " << options.max_sweeps << " sweeps (off-diagonal norm " << off
         << ")";
      throw std::runtime_error(os.str());
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        const Complex phase = a(p, q) / r;
        const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // V = diag(phase correction) · real rotation, acting on columns p, q.
        const Complex v_pp = c;
        const Complex v_pq = s;
        const Complex v_qp = -s * std::conj(phase);
        const Complex v_qq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * v_pp + akq * v_qp;
          a(k, q) = akp * v_pq + akq * v_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(v_pp) * apk + std::conj(v_qp) * aqk;
          a(q, k) = std::conj(v_pq) * apk + std::conj(v_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    off = off_norm();
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> spectrum(const DensityMatrix& rho, const JacobiOptions& options) {
  auto values = hermitian_eigenvalues(rho.entries(), options);
  if (!values.empty() && values.front() < -1e-10) {
    throw std::domain_error("density matrix is not positive semidefinite (eigenvalue " + std::to_string(values.front()) +
                            ")");
  }
  for (double& v : values) v = std::clamp(v, 0.0, 1.0);
  return values;
}

double renyi_entropy(const DensityMatrix& rho, int alpha) {
  if (alpha == 1) throw std::invalid_argument("Renyi order 1 is the von Neumann entropy; use von_neumann");
  if (alpha < 1) throw std::invalid_argument("Renyi order must be >= 2");
  return std::log2(trace_power(rho, alpha)) / (1.0 - alpha);
}

double unified_entropy(const DensityMatrix& rho, int alpha, double s) {
  if (alpha < 2) throw std::invalid_argument("unified entropy needs alpha >= 2");
  if (s == 0.0) return std::log(trace_power(rho, alpha)) / (1.0 - alpha);
  return (std::pow(trace_power(rho, alpha), s) - 1.0) / (s * (1.0 - alpha));
}

double tsallis_entropy(const DensityMatrix& rho, int alpha) { return unified_entropy(rho, alpha, 1.0); }

double generalized_entropy(const DensityMatrix& rho, int alpha, const EntropyFamily& family) {
  struct Visitor {
    const DensityMatrix& rho;
    int alpha;
    double operator()(Renyi) const { return renyi_entropy(rho, alpha); }
    double operator()(Tsallis) const { return tsallis_entropy(rho, alpha); }
    double operator()(Unified u) const { return unified_entropy(rho, alpha, u.s); }
  };
  return std::visit(Visitor{rho, alpha}, family);
}

namespace {

struct PowerResult {
  double value;
  double residual;
  bool converged;
};

PowerResult power_iterate(const ComplexMatrix& m, ComplexVector v, const PowerIterationOptions& options) {
  v.normalize();
  double theta = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < options.max_iterations; ++it) {
    const ComplexVector w = m * v;
    theta = v.dot(w).real();  // Eigen's dot conjugates the left operand
    residual = (w - theta * v).norm();
    if (residual <= options.relative_tolerance * std::abs(theta)) return {theta, residual, true};
    const double wn = w.norm();
    if (wn == 0.0) return {0.0, 0.0, true};
    v = w / wn;
  }
  return {theta, residual, false};
}

}  // namespace

double largest_eigenvalue(const DensityMatrix& rho, const PowerIterationOptions& options) {
  const ComplexMatrix& m = rho.entries();
  const Eigen::Index n = m.rows();
  std::mt19937_64 engine(0x5eedULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ComplexVector start(n);
  for (Eigen::Index i = 0; i < n; ++i) start(i) = Complex(unit(engine), unit(engine));

  Eigen::Index top = 0;
  const double max_diag = m.diagonal().real().maxCoeff(&top);
  auto result = power_iterate(m, start, options);
  // λ_max >= max_i ρ_ii; landing below it means the start vector was (nearly)
  // orthogonal to the top eigenspace, so restart from the heaviest basis vector.
  if (!result.converged || result.value < max_diag - 1e-12) {
    ComplexVector basis = ComplexVector::Zero(n);
    basis(top) = 1.0;
    basis += 1e-3 * start;
    const auto retry = power_iterate(m, basis, options);
    if (retry.converged && (!result.converged || retry.value > result.value)) result = retry;
  }
  if (!result.converged) {
    std::ostringstream os;
    os << "power iteration did not converge in " << options.max_iterations << " iterations (residual " << result.residual
       << ")";
    throw std::runtime_error(os.str());
  }
  return result.value;
}

double min_entropy(const DensityMatrix& rho, const PowerIterationOptions& options) {
  return -std::log2(largest_eigenvalue(rho, options));
}

double von_neumann(const DensityMatrix& rho) {
  double s = 0.0;
  for (double l : spectrum(rho)) {
    if (l > 1e-14) s -= l * std::log2(l);
  }
  return s;
}

double entropy_bits(const DensityMatrix& rho, const EntropyOrder& order) {
  if (const int* alpha = std::get_if<int>(&order)) {
    if (*alpha == 1) return von_neumann(rho);
    return renyi_entropy(rho, *alpha);
  }
  if (std::holds_alternative<MinOrder>(order)) return min_entropy(rho);
  return von_neumann(rho);
}

TripartiteResult negative_tripartite(const UnitaryMatrix& u, const ChoiPartitionSpec& spec, const EntropyOrder& order) {
  const PureState choi = choi_state(u, spec);
  constexpr int A = 0, C = 2, D = 3;
  const auto S = [&](std::vector<int> keep) { return entropy_bits(reduced_density(choi, keep), order); };
  const double s_a = S({A});
  const double s_ac = S({A, C});
  const double s_ad = S({A, D});
  const double i_a_cd = s_a + S({C, D}) - S({A, C, D});
  const double i_a_c = s_a + S({C}) - s_ac;
  const double i_a_d = s_a + S({D}) - s_ad;
  TripartiteResult out;
  out.direct = i_a_cd - i_a_c - i_a_d;
  out.shortcut = s_ac + s_ad - std::log2(static_cast<double>(spec.total()));
  return out;
}

}  // namespace entdesign
