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

#include "entdesign/moments.hpp"
#include "oracles.hpp"

using namespace entdesign;

TEST_CASE("haar_state_moment examples") {
  CHECK(haar_state_moment({2, 2}, 1).value == 1);
  CHECK(haar_state_moment({2, 2}, 2).value == Rational(4, 5));
  CHECK(haar_state_moment({2, 2}, 3).value == Rational(7, 10));
  CHECK_THROWS_AS(haar_state_moment({2, 2}, 10), std::length_error);
  CHECK_THROWS_AS(haar_state_moment({0, 2}, 2), std::invalid_argument);
}

TEST_CASE("state moment matches the dense projector oracle") {
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
      if (std::pow(a * b, alpha) > 300) continue;
      CHECK(to_double(haar_state_moment({a, b}, alpha).value) ==
            doctest::Approx(oracle::dense_state_moment(a, b, alpha)).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha=2 closed form and swap symmetry") {
  for (int a = 1; a <= 16; ++a) {
    for (int b = 1; b <= 16; ++b) {
      const auto m = haar_state_moment({a, b}, 2).value;
      CHECK(m == oracle::frac(a + b, a * b + 1));
    }
  }
  for (int alpha = 1; alpha <= 6; ++alpha) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        CHECK(haar_state_moment({a, b}, alpha).value == haar_state_moment({b, a}, alpha).value);
      }
    }
  }
}

TEST_CASE("moments are bounded and decrease with alpha") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      Rational previous = 1;
      for (int alpha = 1; alpha <= 7; ++alpha) {
        const auto m = haar_state_moment({a, b}, alpha).value;
        CHECK(m > 0);
        CHECK(m <= previous);
        // maximally mixed floor min(d_A, d_B)^{-(α-1)}
        const int r = std::min(a, b);
        CHECK(m >= Rational(1, power(Integer(r), static_cast<unsigned long>(alpha - 1))));
        previous = m;
      }
    }
  }
}

TEST_CASE("Catalan numbers and asymptotics") {
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  for (int alpha = 2; alpha <= 12; ++alpha) {
    CHECK(std::log2(catalan(alpha).get_d()) / (alpha - 1) <= 2.0);
  }
  CHECK(state_moment_asymptotic(2, 2) == 1.0);
  CHECK(state_moment_asymptotic(7, 1) == 1.0);
  CHECK(state_moment_asymptotic(16, 3) == 5.0 / 256.0);
  for (int alpha = 2; alpha <= 4; ++alpha) {
    const auto m = haar_state_moment({64, 64}, alpha).value;
    const double scaled = to_double(m * Rational(power(Integer(64), static_cast<unsigned long>(alpha - 1))));
    CHECK(std::abs(scaled / catalan(alpha).get_d() - 1.0) < 0.01);
  }
}

TEST_CASE("haar_choi_moment") {
  CHECK(haar_choi_moment({2, 2, 2, 2}, 1).value == 1);
  CHECK(haar_choi_moment({3, 1, 1, 3}, 1).value == 1);
  CHECK(haar_choi_moment({2, 2, 2, 2}, 2).value == Rational(2, 5));
  // trivial B and D: ρ_AC is the full Choi state, pure
  for (int alpha = 1; alpha <= 4; ++alpha) CHECK(haar_choi_moment({4, 1, 4, 1}, alpha).value == 1);
  // trivial A and C: ρ_AC is a scalar
  CHECK(haar_choi_moment({1, 4, 1, 4}, 3).value == 1);
  // trivial A and D: ρ_AC = ρ_C = 1/d_C maximally mixed
  CHECK(haar_choi_moment({1, 4, 4, 1}, 3).value == Rational(1, 16));
  CHECK(haar_choi_moment({2, 3, 3, 2}, 3).value == haar_choi_moment({3, 2, 2, 3}, 3).value);
  CHECK_THROWS_AS(haar_choi_moment({1, 2, 1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(haar_choi_moment({2, 2, 1, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(haar_choi_moment({4, 2, 2, 4}, 7), std::length_error);
}

TEST_CASE("design_renyi_lower_bound") {
  const auto m = haar_state_moment({2, 2}, 2);
  CHECK(design_renyi_lower_bound(m) == doctest::Approx(std::log2(5.0 / 4.0)).epsilon(1e-15));
  CHECK(renyi_bits_from_moment(Rational(1, 1 << 12), 4) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(design_renyi_lower_bound(haar_choi_moment({2, 2, 2, 2}, 2)) ==
        doctest::Approx(std::log2(5.0 / 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(design_renyi_lower_bound(haar_state_moment({2, 2}, 1)), std::invalid_argument);
}

TEST_CASE("theorem bounds") {
  BoundParams p;
  p.d_A = 16;
  p.d_B = 16;
  p.alpha = 2;
  auto t1 = theorem_bound(Theorem::T1, p);
  CHECK(t1.bound_bits == doctest::Approx(3.0));
  CHECK(t1.valid);
  CHECK(t1.asymptotic);

  BoundParams t3p;
  t3p.d_A = 1024;
  t3p.d_B = 8;
  t3p.a = 1.0;
  auto t3 = theorem_bound(Theorem::T3, t3p);
  CHECK(t3.alpha == 10);
  CHECK(t3.bound_bits == doctest::Approx(7.0));
  CHECK(t3.valid);  // 1000 <= 16 * 64
  t3p.d_B = 7;      // 1000 > 16 * 49
  CHECK_FALSE(theorem_bound(Theorem::T3, t3p).valid);

  for (int d : {2, 8, 64}) {
    BoundParams q;
    q.d_A = d;
    q.d_B = d;
    const auto t2b = theorem_bound(Theorem::T2b, q);
    CHECK(t2b.bound_bits == doctest::Approx(std::log2(d) - 3.0));
    CHECK(t2b.relaxed_bits.value() <= t2b.bound_bits);
    q.field_constant = 1;
    CHECK(theorem_bound(Theorem::T2b, q).bound_bits == doctest::Approx(std::log2(d) - 2.0));
  }

  BoundParams t2;
  t2.d_A = 4;
  t2.d_B = 4;
  t2.alpha = 3;
  const auto t2a = theorem_bound(Theorem::T2a, t2);
  CHECK(t2a.valid);
  CHECK(t2a.bound_bits >= t2a.relaxed_bits.value());
  t2.alpha = 8;  // q = 512/512 = 1
  CHECK_FALSE(theorem_bound(Theorem::T2a, t2).valid);

  BoundParams t5;
  t5.d_A = 2;
  t5.d_B = 2;
  t5.d_C = 2;
  t5.d_D = 2;
  t5.alpha = 3;
  CHECK_FALSE(theorem_bound(Theorem::T5, t5).valid);
  t5.d_A = 8;
  t5.d_B = 8;
  t5.d_C = 8;
  t5.d_D = 8;
  const auto t5r = theorem_bound(Theorem::T5, t5);
  CHECK(t5r.valid);
  CHECK(t5r.constraint_report.find("assumption") != std::string::npos);
  BoundParams t4 = t5;
  const auto t4r = theorem_bound(Theorem::T4, t4);
  CHECK(t4r.asymptotic);
  CHECK(t4r.bound_bits == doctest::Approx(6.0 - std::log2(5.0) / 2.0));
  CHECK(t5r.bound_bits < t4r.bound_bits);

  BoundParams t6;
  t6.d = 1024;
  t6.a = 1.0;
  const auto t6r = theorem_bound(Theorem::T6, t6);
  CHECK(t6r.alpha == 10);
  CHECK(t6r.valid);  // 4·100 <= 1024
  CHECK(t6r.bound_bits == doctest::Approx(7.0));
  t6.d = 256;  // α = 8, 4·64 = 256 <= 256
  CHECK(theorem_bound(Theorem::T6, t6).valid);
  t6.d = 128;  // α = 7, 196 > 128
  CHECK_FALSE(theorem_bound(Theorem::T6, t6).valid);

  BoundParams missing;
  CHECK_THROWS_AS(theorem_bound(Theorem::T1, missing), std::invalid_argument);
  CHECK(parse_theorem("T2b") == Theorem::T2b);
  CHECK_THROWS_AS(parse_theorem("T9"), std::invalid_argument);
}

TEST_CASE("exact Jensen bound dominates the finite-size state bounds") {
  for (int d : {2, 4, 8, 16}) {
    for (int alpha = 2; alpha <= 5; ++alpha) {
      const double jensen = design_renyi_lower_bound(haar_state_moment({d, d}, alpha));
      BoundParams p;
      p.d_A = d;
      p.d_B = d;
      p.alpha = alpha;
      for (Theorem t : {Theorem::T2a, Theorem::T2b}) {
        const auto b = theorem_bound(t, p);
        if (b.valid) CHECK(jensen >= b.bound_bits);
      }
      CHECK(jensen >= std::log2(d) - 2.0);
    }
  }
}
