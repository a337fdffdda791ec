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

#include "entdesign/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "entdesign/weingarten.hpp"

namespace entdesign {

void StatePartition::validate() const {
  if (d_A < 1 || d_B < 1) {
    throw std::invalid_argument("state partition dimensions must be >= 1 (got d_A=" + std::to_string(d_A) +
                                ", d_B=" + std::to_string(d_B) + ")");
  }
}

void ChoiPartitionSpec::validate() const {
  if (d_A < 1 || d_B < 1 || d_C < 1 || d_D < 1) throw std::invalid_argument("Choi partition dimensions must be >= 1");
  if (d_A * d_B != d_C * d_D) {
    throw std::invalid_argument("Choi partition needs d_A*d_B == d_C*d_D (got " + std::to_string(d_A * d_B) + " vs " +
                                std::to_string(d_C * d_D) + ")");
  }
}

namespace {

std::vector<Integer> powers_of(int base, int max_exponent) {
  std::vector<Integer> out(static_cast<std::size_t>(max_exponent) + 1);
  for (int k = 0; k <= max_exponent; ++k) out[static_cast<std::size_t>(k)] = power(Integer(base), static_cast<unsigned long>(k));
  return out;
}

// d_left^{ξ(στ)} d_right^{ξ(σ)} for every σ in the table's order.
std::vector<Integer> cycle_weights(const GroupTable& group, int d_left, int d_right) {
  const int alpha = group.degree();
  const auto tau = Permutation::full_cycle(alpha);
  const auto left = powers_of(d_left, alpha);
  const auto right = powers_of(d_right, alpha);
  std::vector<Integer> out(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    const int xi_shift = cycle_count(group.element(i) * tau);
    out[i] = left[static_cast<std::size_t>(xi_shift)] * right[static_cast<std::size_t>(group.cycles(i))];
  }
  return out;
}

}  // namespace

MomentResult haar_state_moment(const StatePartition& p, int alpha, int cap) {
  p.validate();
  const GroupTable group(alpha, cap);
  Integer sum = 0;
  for (const auto& w : cycle_weights(group, p.d_A, p.d_B)) sum += w;
  const Integer symmetric_dim = binomial(Integer(p.total() + alpha - 1), static_cast<unsigned long>(alpha));
  Rational value(sum, factorial(alpha) * symmetric_dim);
  value.canonicalize();
  return {std::move(value), alpha, p};
}

MomentResult haar_choi_moment(const ChoiPartitionSpec& p, int alpha, int cap) {
  p.validate();
  if (alpha < 1) throw std::invalid_argument("moment order must be >= 1");
  if (alpha > cap) {
    throw std::length_error("Choi moment double sum has (" + factorial(alpha).get_str() + ")^2 terms at alpha=" +
                            std::to_string(alpha) + ", above the cap alpha <= " + std::to_string(cap));
  }
  const int d = p.total();
  if (d < alpha) {
    throw std::invalid_argument("Choi moment requires d >= alpha (d=" + std::to_string(d) +
                                ", alpha=" + std::to_string(alpha) + "); Weingarten values are pseudo-inverse there");
  }
  const GroupTable group(alpha, cap);
  const auto input_weights = cycle_weights(group, p.d_A, p.d_B);
  const auto output_weights = cycle_weights(group, p.d_C, p.d_D);

  // Group the (α!)² terms by the cycle type of σγ⁻¹ so only one rational
  // multiply per class is needed.
  std::vector<Integer> by_class(group.classes().size());
  std::vector<Integer> partial(group.classes().size());
  for (std::size_t s = 0; s < group.order(); ++s) {
    for (auto& v : partial) v = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
      const std::size_t prod = group.multiply(s, group.inverse(g));
      partial[static_cast<std::size_t>(group.class_of(prod))] += output_weights[g];
    }
    for (std::size_t c = 0; c < partial.size(); ++c) by_class[c] += input_weights[s] * partial[c];
  }

  const auto table = weingarten_table(d, alpha);
  Rational value = 0;
  for (std::size_t c = 0; c < by_class.size(); ++c) value += table->value(group.classes()[c]) * by_class[c];
  value /= Rational(power(Integer(d), static_cast<unsigned long>(alpha)));
  value.canonicalize();
  return {std::move(value), alpha, p};
}

double state_moment_asymptotic(int d_A, int alpha) {
  if (d_A < 1 || alpha < 1) throw std::invalid_argument("asymptotic moment needs d_A >= 1 and alpha >= 1");
  Rational value(catalan(alpha), power(Integer(d_A), static_cast<unsigned long>(alpha - 1)));
  value.canonicalize();
  return to_double(value);
}

Integer catalan(int alpha) {
  if (alpha < 1) throw std::invalid_argument("Catalan index must be >= 1");
  return binomial(Integer(2 * alpha), static_cast<unsigned long>(alpha)) / (alpha + 1);
}

double renyi_bits_from_moment(const Rational& moment, int alpha) {
  if (alpha == 1) {
    throw std::invalid_argument("Renyi order 1 is the von Neumann limit; the 1/(1-alpha) prefactor is singular");
  }
  if (alpha < 1) throw std::invalid_argument("Renyi order must be >= 2");
  return log2_exact(moment) / (1.0 - alpha);
}

double design_renyi_lower_bound(const MomentResult& m) { return renyi_bits_from_moment(m.value, m.alpha); }

std::string_view theorem_name(Theorem id) {
  switch (id) {
    case Theorem::T1: return "T1";
    case Theorem::T2a: return "T2a";
    case Theorem::T2b: return "T2b";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::T5: return "T5";
    case Theorem::T6: return "T6";
  }
  return "?";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::T1, Theorem::T2a, Theorem::T2b, Theorem::T3, Theorem::T4, Theorem::T5, Theorem::T6}) {
    if (theorem_name(t) == name) return t;
  }
  throw std::invalid_argument("unknown theorem id '" + std::string(name) + "' (expected T1, T2a, T2b, T3, T4, T5, T6)");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int require(const std::optional<int>& value, std::string_view name, Theorem id) {
  if (!value) throw std::invalid_argument(std::string(theorem_name(id)) + " needs parameter " + std::string(name));
  if (*value < 1) throw std::invalid_argument(std::string(theorem_name(id)) + ": " + std::string(name) + " must be >= 1");
  return *value;
}

int require_alpha(const BoundParams& params, Theorem id) {
  const int alpha = require(params.alpha, "alpha", id);
  if (alpha < 2) throw std::invalid_argument(std::string(theorem_name(id)) + " needs alpha >= 2");
  return alpha;
}

double require_a(const BoundParams& params, Theorem id) {
  if (!params.a) throw std::invalid_argument(std::string(theorem_name(id)) + " needs parameter a");
  if (!(*params.a > 0.0) || !std::isfinite(*params.a)) {
    throw std::invalid_argument(std::string(theorem_name(id)) + ": a must be a positive finite number");
  }
  return *params.a;
}

double log2_catalan_per_order(int alpha) {
  return log2_exact(Rational(catalan(alpha))) / (alpha - 1);
}

// q := α³ / (32 d_B²), h(q) := 1 + 2q / (3(1 - q)); nullopt when q >= 1.
std::optional<double> h_of_q(int alpha, int d_B, double& q_out) {
  Rational q(power(Integer(alpha), 3), 32 * power(Integer(d_B), 2));
  q.canonicalize();
  q_out = to_double(q);
  if (q >= 1) return std::nullopt;
  const Rational h = 1 + 2 * q / (3 * (1 - q));
  return to_double(h);
}

int total_dimension(const BoundParams& params, Theorem id) {
  if (params.d) {
    if (*params.d < 1) throw std::invalid_argument(std::string(theorem_name(id)) + ": d must be >= 1");
    return *params.d;
  }
  if (params.d_A && params.d_B) return require(params.d_A, "d_A", id) * require(params.d_B, "d_B", id);
  throw std::invalid_argument(std::string(theorem_name(id)) + " needs d or the Choi dimensions d_A, d_B");
}

// ceil(log2(dim) / a), guarded against log2 landing a hair above an integer.
int derived_order(int dim, double a) {
  const double x = std::log2(static_cast<double>(dim)) / a;
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-12 * std::max(1.0, x)) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(x));
}

}  // namespace

BoundResult theorem_bound(Theorem id, const BoundParams& params) {
  BoundResult out;
  out.theorem = id;
  std::ostringstream report;
  bool valid = true;
  auto fail = [&](const std::string& why) {
    valid = false;
    report << "hypothesis fails: " << why << "; ";
  };

  switch (id) {
    case Theorem::T1: {
      const int d_A = require(params.d_A, "d_A", id);
      const int alpha = require_alpha(params, id);
      if (params.d_B && *params.d_B != d_A) fail("equal partitions d_A == d_B required");
      out.alpha = alpha;
      out.bound_bits = std::log2(static_cast<double>(d_A)) - log2_catalan_per_order(alpha);
      out.asymptotic = true;
      report << "asymptotic: O(d_A^-2) remainder omitted; ";
      break;
    }
    case Theorem::T2a: {
      const int d_A = require(params.d_A, "d_A", id);
      const int d_B = require(params.d_B, "d_B", id);
      const int alpha = require_alpha(params, id);
      out.alpha = alpha;
      if (d_A > d_B) fail("d_A <= d_B required");
      double q = 0.0;
      const auto h = h_of_q(alpha, d_B, q);
      report << "q=" << q << "; ";
      out.relaxed_bits = std::log2(static_cast<double>(d_A)) - 2.0;
      if (!h) {
        fail("q = alpha^3/(32 d_B^2) < 1 required");
        out.bound_bits = kNaN;
        break;
      }
      const double a = alpha;
      const double numerator = 2.0 * a - 1.5 * std::log2(a) + std::log2(*h) - 0.5 * std::log2(std::numbers::pi);
      out.bound_bits = std::log2(static_cast<double>(d_A)) - numerator / (a - 1.0);
      break;
    }
    case Theorem::T2b: {
      const int d_A = require(params.d_A, "d_A", id);
      const int d_B = require(params.d_B, "d_B", id);
      if (params.field_constant != 1 && params.field_constant != 2) {
        throw std::invalid_argument("T2b: field constant c must be 1 (real) or 2 (complex)");
      }
      if (params.alpha) out.alpha = *params.alpha;
      if (d_A > d_B) fail("d_A <= d_B required");
      const double ratio = std::sqrt(static_cast<double>(d_A) / d_B);
      const double log_c = std::log2(static_cast<double>(params.field_constant));
      out.bound_bits = std::log2(static_cast<double>(d_A)) - 2.0 * std::log2(1.0 + ratio) - log_c;
      out.relaxed_bits = std::log2(static_cast<double>(d_A)) - 2.0 / std::numbers::ln2 * ratio - log_c;
      break;
    }
    case Theorem::T3: {
      const int d_A = require(params.d_A, "d_A", id);
      const int d_B = require(params.d_B, "d_B", id);
      const double a = require_a(params, id);
      if (a > 1.0) fail("0 < a <= 1 required");
      const int alpha = derived_order(d_A, a);
      out.alpha = alpha;
      report << "alpha=ceil(log2 d_A / a)=" << alpha << "; ";
      if (alpha < 1) fail("alpha >= 1 required (d_A >= 2)");
      // α <= (16 d_B²)^{1/3}  <=>  α³ <= 16 d_B²
      if (power(Integer(alpha), 3) > 16 * power(Integer(d_B), 2)) fail("alpha <= (16 d_B^2)^(1/3) required");
      out.bound_bits = std::log2(static_cast<double>(d_A)) - 2.0 - a;
      break;
    }
    case Theorem::T4: {
      const int d_A = require(params.d_A, "d_A", id);
      const int d_B = require(params.d_B, "d_B", id);
      const int alpha = require_alpha(params, id);
      out.alpha = alpha;
      const bool equal = d_A == d_B && (!params.d_C || *params.d_C == d_A) && (!params.d_D || *params.d_D == d_A);
      if (!equal) fail("equal partitions d_A == d_B == d_C == d_D required");
      const int d = d_A * d_B;
      out.bound_bits = std::log2(static_cast<double>(d)) - log2_catalan_per_order(alpha);
      out.asymptotic = true;
      report << "asymptotic: O(d^-1) remainder omitted; ";
      break;
    }
    case Theorem::T5: {
      const int d_A = require(params.d_A, "d_A", id);
      const int d_B = require(params.d_B, "d_B", id);
      const int alpha = require_alpha(params, id);
      out.alpha = alpha;
      if (params.d_C && params.d_D && (*params.d_C) * (*params.d_D) != d_A * d_B) {
        throw std::invalid_argument("T5: d_C*d_D must equal d_A*d_B");
      }
      const int d = d_A * d_B;
      if (d_A > d_B) fail("d_A <= d_B required");
      // d > sqrt(6) α^{7/4}  <=>  d^4 > 36 α^7
      const bool big_enough = power(Integer(d), 4) > 36 * power(Integer(alpha), 7);
      if (!big_enough) fail("d > sqrt(6) alpha^(7/4) required");
      double q = 0.0;
      const auto h = h_of_q(alpha, d_B, q);
      report << "q=" << q << " computed with d_B as in the state bound (assumption); ";
      if (!h) fail("q = alpha^3/(32 d_B^2) < 1 required");
      if (!big_enough || !h) {
        out.bound_bits = kNaN;
        break;
      }
      const double a = alpha;
      const double a_alpha = 1.0 / (1.0 - 6.0 * std::pow(a, 3.5) / (static_cast<double>(d) * d));
      const double correction = std::log2(a_alpha * *h / 8.0 * (7.0 + std::cosh(2.0 * a * (a - 1.0) / d)));
      out.bound_bits = std::log2(static_cast<double>(d)) - log2_catalan_per_order(alpha) - correction / (a - 1.0);
      break;
    }
    case Theorem::T6: {
      const int d = total_dimension(params, id);
      const double a = require_a(params, id);
      const int alpha = derived_order(d, a);
      out.alpha = alpha;
      report << "alpha=ceil(log2 d / a)=" << alpha << "; ";
      if (alpha < 1) fail("alpha >= 1 required (d >= 2)");
      // α <= sqrt(d)/2  <=>  4α² <= d
      if (4LL * alpha * alpha > d) fail("alpha <= sqrt(d)/2 required");
      out.bound_bits = std::log2(static_cast<double>(d)) - 2.0 - a;
      break;
    }
  }
  out.valid = valid;
  out.constraint_report = report.str();
  if (!out.constraint_report.empty()) out.constraint_report.resize(out.constraint_report.size() - 2);
  if (out.constraint_report.empty()) out.constraint_report = "ok";
  return out;
}

}  // namespace entdesign
