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

#include "entdesign/weingarten.hpp"

#include <iostream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace entdesign {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& warning_handler() {
  static WarningHandler handler = [](std::string_view message) { std::cerr << "warning: " << message << '\n'; };
  return handler;
}

}  // namespace

void set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(warning_mutex());
  warning_handler() = std::move(handler);
}

void emit_warning(std::string_view message) {
  std::lock_guard lock(warning_mutex());
  if (warning_handler()) warning_handler()(message);
}

WeingartenTable::WeingartenTable(int d, int alpha) : dimension_(d), order_(alpha) {
  if (d < 1) throw std::invalid_argument("Weingarten dimension must be >= 1");
  if (alpha < 1) throw std::invalid_argument("Weingarten order must be >= 1");
  if (d < alpha) {
    emit_warning("Wg(d=" + std::to_string(d) + ", alpha=" + std::to_string(alpha) +
                 "): d < alpha, using the pseudo-inverse (irreps restricted to <= d rows)");
  }
  const auto irreps = partitions_of(alpha);
  const Integer group_order = factorial(alpha);
  const Integer norm = group_order * group_order;
  for (const auto& mu : irreps) {
    Rational sum = 0;
    for (const auto& lambda : irreps) {
      if (lambda.rows() > d) continue;
      const Integer dim = sym_irrep_dim(lambda);
      Rational term(dim * dim * mn_character(lambda, mu), unitary_irrep_dim(lambda, d));
      term.canonicalize();
      sum += term;
    }
    sum /= norm;
    sum.canonicalize();
    values_.emplace(mu, std::move(sum));
  }
}

const Rational& WeingartenTable::value(const IntegerPartition& cycle_type) const {
  if (cycle_type.size() != order_) {
    throw std::invalid_argument("cycle type " + cycle_type.to_string() + " is not a partition of " +
                                std::to_string(order_));
  }
  return values_.at(cycle_type);
}

const Rational& WeingartenTable::value(const Permutation& sigma) const { return value(cycle_type(sigma)); }

std::shared_ptr<const WeingartenTable> weingarten_table(int d, int alpha) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const WeingartenTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[{d, alpha}];
  if (!slot) slot = std::make_shared<const WeingartenTable>(d, alpha);
  return slot;
}

Rational weingarten(int d, const Permutation& sigma) { return weingarten_table(d, sigma.size())->value(sigma); }

Rational weingarten(int d, const IntegerPartition& cycle_type) {
  return weingarten_table(d, cycle_type.size())->value(cycle_type);
}

GramMatrix gram_matrix(int d, int alpha, int cap) {
  if (d < 1) throw std::invalid_argument("Gram matrix dimension must be >= 1");
  if (alpha > cap) {
    throw std::length_error("Gram matrix for alpha=" + std::to_string(alpha) + " has (" + factorial(alpha).get_str() +
                            ")^2 entries, above the cap alpha <= " + std::to_string(cap));
  }
  GramMatrix gram;
  gram.alpha = alpha;
  gram.elements = enumerate_group(alpha, cap);
  const std::size_t n = gram.elements.size();
  std::vector<Integer> powers(static_cast<std::size_t>(alpha) + 1);
  for (int k = 0; k <= alpha; ++k) powers[static_cast<std::size_t>(k)] = power(Integer(d), static_cast<unsigned long>(k));
  gram.entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto inv = gram.elements[i].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      gram.entries.push_back(powers[static_cast<std::size_t>(cycle_count(inv * gram.elements[j]))]);
    }
  }
  return gram;
}

bool verify_wg_inverse(int d, int alpha, int cap) {
  if (alpha > cap) {
    throw std::length_error("Weingarten inverse check capped at alpha <= " + std::to_string(cap));
  }
  if (d < alpha) {
    throw std::invalid_argument("Weingarten inverse check needs d >= alpha; for d=" + std::to_string(d) +
                                " < alpha=" + std::to_string(alpha) +
                                " the Gram matrix d^xi is singular and Wg is only a pseudo-inverse");
  }
  const GroupTable group(alpha, cap);
  const auto table = weingarten_table(d, alpha);
  std::vector<Rational> wg_by_class;
  for (const auto& c : group.classes()) wg_by_class.push_back(table->value(c));
  std::vector<Integer> powers(static_cast<std::size_t>(alpha) + 1);
  for (int k = 0; k <= alpha; ++k) powers[static_cast<std::size_t>(k)] = power(Integer(d), static_cast<unsigned long>(k));

  const std::size_t n = group.order();
  const std::size_t n_classes = group.classes().size();
  std::vector<Integer> by_class(n_classes);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < n; ++r) {
      // Integer weights grouped by the class of σγ⁻¹, then one rational dot product.
      for (auto& v : by_class) v = 0;
      const std::size_t r_inv = group.inverse(r);
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t left = group.multiply(s, group.inverse(g));
        const std::size_t right = group.multiply(g, r_inv);
        by_class[static_cast<std::size_t>(group.class_of(left))] += powers[static_cast<std::size_t>(group.cycles(right))];
      }
      Rational entry = 0;
      for (std::size_t c = 0; c < n_classes; ++c) entry += wg_by_class[c] * by_class[c];
      if (entry != (s == r ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace entdesign
