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

#include "entdesign/permgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace entdesign {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation: images must be a bijection on [0, n)");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::full_cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("transposition points out of range");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(out));
}

std::uint64_t Permutation::rank() const {
  // Lehmer code read as a factorial-base number.
  const std::size_t n = images_.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (images_[j] < images_[i]) ++smaller;
    }
    r = r * (n - i) + smaller;
  }
  return r;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(lhs.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.images_[static_cast<std::size_t>(rhs.images_[i])];
  return Permutation(std::move(out));
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

IntegerPartition IntegerPartition::ones(int n) {
  return IntegerPartition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int IntegerPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IntegerPartition IntegerPartition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return IntegerPartition(std::move(out));
}

int IntegerPartition::hook(int row, int col) const {
  const auto conj = conjugate();
  return (*this)[row] - col + conj[col] - row - 1;
}

std::string IntegerPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

int cycle_count(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !visited[static_cast<std::size_t>(j)]; j = sigma(j)) visited[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

IntegerPartition cycle_type(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !visited[static_cast<std::size_t>(j)]; j = sigma(j)) {
      visited[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return IntegerPartition(std::move(lengths));
}

std::vector<IntegerPartition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      extend(remaining - p, p);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

Integer class_size(const IntegerPartition& mu) {
  // z_mu = prod_k k^{m_k} m_k!
  Integer z = 1;
  std::map<int, int> multiplicity;
  for (int p : mu.parts()) ++multiplicity[p];
  for (const auto& [part, count] : multiplicity) {
    z *= power(Integer(part), static_cast<unsigned long>(count)) * factorial(count);
  }
  return factorial(mu.size()) / z;
}

namespace {

void check_cap(int alpha, int cap) {
  if (alpha < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
  if (alpha > cap) {
    throw std::length_error("S_" + std::to_string(alpha) + " has " + factorial(alpha).get_str() +
                            " elements, above the enumeration cap alpha <= " + std::to_string(cap));
  }
}

}  // namespace

std::vector<Permutation> enumerate_group(int alpha, int cap) {
  check_cap(alpha, cap);
  std::vector<int> images(static_cast<std::size_t>(alpha));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(alpha).get_ui());
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

// Beta-set (first-column hook lengths) with exactly `rows` beads.
std::vector<int> beta_set(std::span<const int> parts) {
  const int rows = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < rows; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + rows - 1 - i;
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int rows = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < rows; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (rows - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

using CharacterKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterCache {
  std::shared_mutex mutex;
  std::map<CharacterKey, std::int64_t> values;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

// lambda: non-increasing parts; mu: remaining cycle lengths, non-increasing.
std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto& cache = character_cache();
  CharacterKey key{lambda, mu};
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }

  const int strip = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const std::vector<int> beta = beta_set(lambda);
  std::int64_t total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int target = beta[b] - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Leg length of the removed rim hook = beads strictly between target and beta[b].
    int between = 0;
    for (int v : beta) {
      if (v > target && v < beta[b]) ++between;
    }
    std::vector<int> moved = beta;
    moved[b] = target;
    const std::int64_t sign = (between % 2 == 0) ? 1 : -1;
    total += sign * mn_recurse(from_beta_set(std::move(moved)), rest);
  }

  std::unique_lock lock(cache.mutex);
  cache.values.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character arguments partition different integers: " + lambda.to_string() + " vs " +
                                mu.to_string());
  }
  const auto lp = lambda.parts();
  const auto mp = mu.parts();
  return mn_recurse(std::vector<int>(lp.begin(), lp.end()), std::vector<int>(mp.begin(), mp.end()));
}

Integer sym_irrep_dim(const IntegerPartition& lambda) {
  const auto conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) hooks *= lambda[i] - j + conj[j] - i - 1;
  }
  return factorial(lambda.size()) / hooks;
}

Integer unitary_irrep_dim(const IntegerPartition& lambda, int d) {
  if (d < 1) throw std::invalid_argument("unitary group dimension must be >= 1");
  if (lambda.rows() > d) return 0;
  const auto conj = lambda.conjugate();
  Integer contents = 1;
  Integer hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      contents *= d + j - i;
      hooks *= lambda[i] - j + conj[j] - i - 1;
    }
  }
  return contents / hooks;
}

CycleLemmaReport verify_cycle_lemma(int alpha, int cap) {
  check_cap(alpha, cap);
  const Permutation tau = Permutation::full_cycle(alpha);
  CycleLemmaReport report{true, 0};
  for (const auto& sigma : enumerate_group(alpha, cap)) {
    const int lhs = cycle_count(sigma * tau) + cycle_count(sigma);
    if (lhs > alpha + 1) report.holds = false;
    if (lhs == alpha + 1) ++report.saturating_count;
  }
  return report;
}

GroupTable::GroupTable(int n, int cap) : degree_(n), elements_(enumerate_group(n, cap)), classes_(partitions_of(n)) {
  std::map<IntegerPartition, int> class_index;
  for (std::size_t k = 0; k < classes_.size(); ++k) class_index.emplace(classes_[k], static_cast<int>(k));
  inverse_.resize(elements_.size());
  cycles_.resize(elements_.size());
  class_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    const auto type = cycle_type(elements_[i]);
    cycles_[i] = type.rows();
    class_[i] = class_index.at(type);
  }
}

std::size_t GroupTable::multiply(std::size_t lhs, std::size_t rhs) const {
  return index_of(elements_[lhs] * elements_[rhs]);
}

}  // namespace entdesign
