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

#include "doctest.h"

#include <cmath>
#include <string>

#include "entdesign/weingarten.hpp"
#include "oracles.hpp"

using namespace entdesign;

TEST_CASE("Weingarten values from the character sum") {
  for (int d = 1; d <= 6; ++d) CHECK(weingarten(d, Permutation::identity(1)) == Rational(1, d));
  CHECK(weingarten(2, Permutation::identity(2)) == Rational(1, 3));
  CHECK(weingarten(2, Permutation::transposition(2, 0, 1)) == Rational(-1, 6));
  CHECK(weingarten(4, Permutation::identity(2)) == Rational(1, 15));
  CHECK(weingarten(4, Permutation::transposition(2, 0, 1)) == Rational(-1, 60));
  // known α=3 values: Wg(1^3) = (d²-2)/(d(d²-1)(d²-4)), Wg(3) = 2/(d(d²-1)(d²-4))
  for (int d = 3; d <= 8; ++d) {
    const Integer den = Integer(d) * (d * d - 1) * (d * d - 4);
    CHECK(weingarten(d, IntegerPartition({1, 1, 1})) == oracle::frac(Integer(d * d - 2), den));
    CHECK(weingarten(d, IntegerPartition({3})) == oracle::frac(Integer(2), den));
    CHECK(weingarten(d, IntegerPartition({2, 1})) == oracle::frac(Integer(-d), den));
  }
}

TEST_CASE("Weingarten table is a class function") {
  for (int alpha = 1; alpha <= 4; ++alpha) {
    const auto table = weingarten_table(5, alpha);
    const auto group = enumerate_group(alpha);
    for (const auto& sigma : group) {
      for (const auto& g : group) {
        CHECK(table->value(g * sigma * g.inverse()) == table->value(cycle_type(sigma)));
      }
    }
  }
}

TEST_CASE("Weingarten matches the exact inverse of the Gram matrix") {
  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (int d = alpha; d <= alpha + 2; ++d) {
      const auto gram = gram_matrix(d, alpha);
      const std::size_t n = gram.elements.size();
      std::vector<Rational> m(gram.entries.begin(), gram.entries.end());
      const auto inv = oracle::invert(m, n);
      // G^{-1}(σ, γ) = Wg(d, σ⁻¹γ)
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(inv[i * n + j] == weingarten(d, gram.elements[i].inverse() * gram.elements[j]));
        }
      }
    }
  }
}

TEST_CASE("gram matrix entries") {
  const auto g1 = gram_matrix(3, 1);
  CHECK(g1.at(0, 0) == 3);
  const auto g2 = gram_matrix(2, 2);
  CHECK(g2.at(0, 0) == 4);
  CHECK(g2.at(0, 1) == 2);
  CHECK(g2.at(1, 0) == 2);
  CHECK(g2.at(1, 1) == 4);
  const auto g3 = gram_matrix(5, 3);
  for (std::size_t i = 0; i < g3.elements.size(); ++i) CHECK(g3.at(i, i) == 125);
  CHECK_THROWS_AS(gram_matrix(3, 7), std::length_error);
}

TEST_CASE("verify_wg_inverse") {
  CHECK(verify_wg_inverse(2, 1));
  CHECK(verify_wg_inverse(3, 2));
  CHECK(verify_wg_inverse(4, 3));
  CHECK_THROWS_AS(verify_wg_inverse(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_wg_inverse(9, 7), std::length_error);
}

TEST_CASE("pseudo-inverse regime warns") {
  std::string seen;
  set_warning_handler([&](std::string_view m) { seen = std::string(m); });
  const WeingartenTable table(1, 2);
  CHECK(table.pseudo_inverse_regime());
  CHECK(seen.find("pseudo-inverse") != std::string::npos);
  // only λ = (2) survives at d = 1: Wg = 1/(2!)² · 1·1/1 · χ = 1/4 for both classes
  CHECK(table.value(IntegerPartition({1, 1})) == Rational(1, 4));
  CHECK(table.value(IntegerPartition({2})) == Rational(1, 4));
  set_warning_handler(nullptr);
}

TEST_CASE("|Wg| decreases with d once d >= 2 alpha") {
  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (const auto& mu : partitions_of(alpha)) {
      double previous = std::abs(to_double(weingarten(2 * alpha, mu)));
      for (int d = 2 * alpha + 1; d <= 64; ++d) {
        const double current = std::abs(to_double(weingarten(d, mu)));
        CHECK(current < previous);
        previous = current;
      }
    }
  }
}
