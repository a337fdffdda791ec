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

// Acceptance checks: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "entdesign/ensembles.hpp"
#include "entdesign/moments.hpp"
#include "entdesign/permgroup.hpp"
#include "entdesign/quantum.hpp"
#include "entdesign/sampling.hpp"
#include "entdesign/weingarten.hpp"

using namespace entdesign;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr double kZ = 4.0;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Verdict()> check;
};

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Verdict exact_alpha2_identity() {
  int checked = 0;
  for (int d_A = 2; d_A <= 16; ++d_A) {
    for (int d_B = d_A; d_B <= 16; ++d_B) {
      const auto m = haar_state_moment({d_A, d_B}, 2).value;
      if (m != frac(d_A + d_B, d_A * d_B + 1)) {
        return {false, "mismatch at d_A=" + std::to_string(d_A) + " d_B=" + std::to_string(d_B) + ": " +
                           to_fraction_string(m)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " pairs"};
}

Verdict mc_versus_exact(const Rational& expected, const Rational& exact, const McEstimate& est) {
  const double z = (est.mean - to_double(exact)) / est.std_error;
  std::ostringstream s;
  s << "exact=" << to_fraction_string(exact) << " mc=" << est.mean << " stderr=" << est.std_error << " z=" << z;
  return {exact == expected && std::abs(z) <= kZ, s.str()};
}

Verdict state_alpha3() {
  const StatePartition p{2, 2};
  return mc_versus_exact(frac(7, 10), haar_state_moment(p, 3).value, mc_state_moment(p, 3, 100000, RandomStream(kSeed)));
}

Verdict choi_alpha2() {
  const ChoiPartitionSpec p{2, 2, 2, 2};
  return mc_versus_exact(frac(2, 5), haar_choi_moment(p, 2).value, mc_choi_moment(p, 2, 100000, RandomStream(kSeed)));
}

Verdict cycle_lemma() {
  std::string counts;
  bool pass = true;
  for (int alpha = 1; alpha <= 8; ++alpha) {
    const auto r = verify_cycle_lemma(alpha);
    pass = pass && r.holds && Integer(r.saturating_count) == catalan(alpha);
    counts += (alpha > 1 ? "," : "") + std::to_string(r.saturating_count);
  }
  return {pass, "saturating counts " + counts};
}

Verdict weingarten_inverse() {
  int checked = 0;
  for (int d = 1; d <= 6; ++d) {
    for (int alpha = 1; alpha <= std::min(d, 5); ++alpha) {
      if (!verify_wg_inverse(d, alpha)) {
        return {false, "fails at d=" + std::to_string(d) + " alpha=" + std::to_string(alpha)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (d, alpha) pairs"};
}

Verdict jensen_dominance() {
  int compared = 0;
  double min_margin = INFINITY;
  for (int d : {2, 4, 8, 16}) {
    for (int alpha = 2; alpha <= 4; ++alpha) {
      const double jensen = design_renyi_lower_bound(haar_state_moment({d, d}, alpha));
      if (jensen < std::log2(d) - 2.0) {
        return {false, "below log2 d_A - 2 at d=" + std::to_string(d) + " alpha=" + std::to_string(alpha)};
      }
      for (Theorem id : {Theorem::T2a, Theorem::T2b}) {
        BoundParams params;
        params.d_A = params.d_B = d;
        params.alpha = alpha;
        const auto bound = theorem_bound(id, params);
        if (!bound.valid) continue;
        ++compared;
        min_margin = std::min(min_margin, jensen - bound.bound_bits);
        if (jensen < bound.bound_bits) {
          return {false, std::string(theorem_name(id)) + " exceeds the Jensen bound at d=" + std::to_string(d) +
                             " alpha=" + std::to_string(alpha)};
        }
      }
    }
  }
  return {true, std::to_string(compared) + " valid theorem rows, smallest margin " + format_shortest(min_margin)};
}

Verdict catalan_convergence() {
  std::string worst;
  bool pass = true;
  for (int alpha = 2; alpha <= 4; ++alpha) {
    const Rational m = haar_state_moment({64, 64}, alpha).value;
    const double scaled = to_double(m * Rational(power(Integer(64), static_cast<unsigned long>(alpha - 1))));
    const double cat = to_double(Rational(catalan(alpha)));
    const double rel = std::abs(scaled - cat) / cat;
    pass = pass && rel < 0.01;
    worst += (alpha > 2 ? ", " : "") + ("alpha=" + std::to_string(alpha) + " rel=" + format_shortest(rel));
  }
  return {pass, worst};
}

Verdict gap_design() {
  double previous = -INFINITY;
  double first = 0.0, last = 0.0;
  for (int d = 2; d <= 32; ++d) {
    if (gap2_purity_exact(d, d) != haar_state_moment({d, d}, 2).value) {
      return {false, "tr rho_A^2 differs from the Haar value at d=" + std::to_string(d)};
    }
    const auto rho = reduced_density(gap2_design_state(d, d), {0});
    const double gap = std::log2(d) - renyi_entropy(rho, 3);
    if (d == 2 && !(gap > 0.0)) return {false, "gap at d_A=2 is " + format_shortest(gap)};
    if (!(gap > previous)) return {false, "gap not increasing at d_A=" + std::to_string(d)};
    previous = gap;
    if (d == 2) first = gap;
    last = gap;
  }
  return {true, "S3 gap " + format_shortest(first) + " at d_A=2 rising to " + format_shortest(last) + " at d_A=32"};
}

DensityMatrix random_density(int d, RandomStream& rng) {
  const int rank = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d));
  ComplexMatrix g(d, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  }
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

Verdict entropy_properties() {
  constexpr double tol = 1e-9;
  RandomStream rng(kSeed);
  double worst = 0.0;
  auto within = [&](double lhs, double rhs) {  // lhs >= rhs - tol
    worst = std::max(worst, rhs - lhs);
    return lhs >= rhs - tol;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 15);
    const auto rho = random_density(d, rng);

    // Rényi monotonicity, min entropy below every order, trace powers against the spectrum
    const auto lambda = spectrum(rho);
    const double h_min = min_entropy(rho);
    double prev = von_neumann(rho);
    for (int alpha = 2; alpha <= 6; ++alpha) {
      const double s = renyi_entropy(rho, alpha);
      if (!within(prev, s) || !within(s, h_min)) return {false, "ordering violated at trial " + std::to_string(trial)};
      prev = s;
      double from_spectrum = 0.0;
      for (double l : lambda) from_spectrum += std::pow(l, alpha);
      const double diff = std::abs(trace_power(rho, alpha) - from_spectrum);
      worst = std::max(worst, diff);
      if (diff > tol) return {false, "trace power differs from the spectrum at trial " + std::to_string(trial)};
    }

    // additivity on a product with a second random state
    const int d2 = 2 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(16 / d >= 2 ? 16 / d - 1 : 1));
    if (d * d2 <= 16) {
      const auto sigma = random_density(d2, rng);
      const auto product = tensor(rho, sigma);
      for (int alpha = 2; alpha <= 6; ++alpha) {
        const double diff =
            std::abs(renyi_entropy(product, alpha) - renyi_entropy(rho, alpha) - renyi_entropy(sigma, alpha));
        worst = std::max(worst, diff);
        if (diff > tol) return {false, "additivity violated at trial " + std::to_string(trial)};
      }
    }

    // partial-trace gap: log2(d_A d_B) - S(AB) >= log2 d_A - S(A)
    std::vector<int> divisors;
    for (int k = 2; k < d; ++k) {
      if (d % k == 0) divisors.push_back(k);
    }
    if (!divisors.empty()) {
      const int d_A = divisors[rng.next_u64() % divisors.size()];
      const int d_B = d / d_A;
      const DensityMatrix bipartite(rho.entries(), {d_A, d_B});
      const auto rho_a = reduced_density(bipartite, {0});
      for (int alpha = 2; alpha <= 6; ++alpha) {
        const double gap_ab = std::log2(d) - renyi_entropy(bipartite, alpha);
        const double gap_a = std::log2(d_A) - renyi_entropy(rho_a, alpha);
        if (!within(gap_ab, gap_a)) return {false, "partial-trace gap grew at trial " + std::to_string(trial)};
      }
    }
  }
  return {true, "1000 matrices, largest violation/discrepancy " + format_shortest(worst)};
}

Verdict design_fixtures() {
  const double f1_pauli = frame_potential(pauli_group(1), 1);
  const auto clifford = single_qubit_clifford();
  const double f2 = frame_potential(clifford, 2);
  const double f3 = frame_potential(clifford, 3);
  const double f4 = frame_potential(clifford, 4);
  const bool pass = f1_pauli == 1.0 && std::abs(f2 - 2.0) <= 1e-12 && std::abs(f3 - 6.0) <= 1e-12 && f4 > 24.0;
  std::ostringstream s;
  s << "Pauli F1=" << format_shortest(f1_pauli) << "; Clifford F2=" << format_shortest(f2)
    << " F3=" << format_shortest(f3) << " (required 6) F4=" << format_shortest(f4) << " (required > 24)";
  return {pass, s.str()};
}

}  // namespace

int main() {
  set_warning_handler([](std::string_view) {});
  const std::vector<Criterion> criteria = {
      {1, "alpha=2 state moment equals (d_A+d_B)/(d_A d_B+1) exactly", 1.0, exact_alpha2_identity},
      {2, "alpha=3 (2,2) state moment is 7/10 and Monte Carlo agrees", 30.0, state_alpha3},
      {3, "Choi (2,2,2,2) alpha=2 moment is 2/5 and Monte Carlo agrees", 60.0, choi_alpha2},
      {4, "cycle lemma holds with Catalan saturating counts, alpha <= 8", 60.0, cycle_lemma},
      {5, "Weingarten pseudo-inverse identity, alpha <= min(d,5), d <= 6", 120.0, weingarten_inverse},
      {6, "Jensen bound dominates T2a/T2b and log2 d_A - 2", 5.0, jensen_dominance},
      {7, "Catalan asymptotics within 1% at d_A=d_B=64", 10.0, catalan_convergence},
      {8, "gap 2-design purity and growing S3 gap", 5.0, gap_design},
      {9, "entropy property suite on random density matrices", 60.0, entropy_properties},
      {10, "Pauli and Clifford frame potential fixtures", 5.0, design_fixtures},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.time_limit_s) {
      v.pass = false;
      v.detail += "; exceeded the " + format_shortest(c.time_limit_s) + " s limit";
    }
    if (!v.pass) ++failures;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
