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

// Test-only reference computations, deliberately independent of the library
// routes they check.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "entdesign/exact.hpp"
#include "entdesign/permgroup.hpp"

namespace entdesign::oracle {

/// p/q in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Exact inverse of a square rational matrix (row-major) by Gauss-Jordan.
inline std::vector<Rational> invert(std::vector<Rational> m, std::size_t n) {
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m[pivot * n + k], m[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    }
    const Rational scale = 1 / m[col * n + col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col * n + k] *= scale;
      inv[col * n + k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const Rational f = m[r * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r * n + k] -= f * m[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

/// Haar average of tr ρ_A^α as tr[P_sym (P_τ^A ⊗ 1_B)] / D_[α], with the
/// symmetric projector and the cyclic shift built as dense operators on
/// (C^{d_A} ⊗ C^{d_B})^{⊗α}. Small dimensions only.
inline double dense_state_moment(int d_A, int d_B, int alpha) {
  const int d = d_A * d_B;
  int big = 1;
  for (int k = 0; k < alpha; ++k) big *= d;
  auto digits_of = [&](int idx) {
    std::vector<int> digits(static_cast<std::size_t>(alpha));
    for (int f = alpha - 1; f >= 0; --f) {
      digits[static_cast<std::size_t>(f)] = idx % d;
      idx /= d;
    }
    return digits;
  };
  auto index_of = [&](const std::vector<int>& digits) {
    int idx = 0;
    for (int v : digits) idx = idx * d + v;
    return idx;
  };
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(big, big);
  std::vector<int> order(static_cast<std::size_t>(alpha));
  for (int k = 0; k < alpha; ++k) order[static_cast<std::size_t>(k)] = k;
  int n_perm = 0;
  do {
    ++n_perm;
    for (int idx = 0; idx < big; ++idx) {
      const auto digits = digits_of(idx);
      std::vector<int> moved(digits.size());
      for (int f = 0; f < alpha; ++f) moved[static_cast<std::size_t>(f)] = digits[static_cast<std::size_t>(order[static_cast<std::size_t>(f)])];
      sym(index_of(moved), idx) += 1.0;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  sym /= n_perm;
  // Cyclic shift of the A factors only: |a_1 b_1, ..., a_α b_α> -> |a_2 b_1, ..., a_1 b_α>.
  Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(big, big);
  for (int idx = 0; idx < big; ++idx) {
    const auto digits = digits_of(idx);
    std::vector<int> moved(digits.size());
    for (int f = 0; f < alpha; ++f) {
      const int a_next = digits[static_cast<std::size_t>((f + 1) % alpha)] / d_B;
      const int b_here = digits[static_cast<std::size_t>(f)] % d_B;
      moved[static_cast<std::size_t>(f)] = a_next * d_B + b_here;
    }
    shift(index_of(moved), idx) = 1.0;
  }
  double sym_dim = 1.0;
  for (int k = 0; k < alpha; ++k) sym_dim = sym_dim * (d + k) / (k + 1);
  return (sym * shift).trace() / sym_dim;
}

}  // namespace entdesign::oracle
