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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entdesign/exact.hpp"

namespace entdesign {

/// Default largest α for which S_α is materialized element by element.
inline constexpr int kEnumerationCap = 9;

/// Element of S_n stored as its image table: entry i is the image of i.
///
/// Products follow the "apply the right factor first" convention:
/// (σ * τ)(i) = σ(τ(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The 1-shift i -> i + 1 (mod n), the canonical full cycle.
  static Permutation full_cycle(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  /// Lexicographic rank in [0, n!); a canonical hash for the element.
  std::uint64_t rank() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Partition of a non-negative integer, kept in canonical non-increasing
/// order. Used both as a cycle type and as an irrep label.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Parts must be positive; they are sorted into non-increasing order.
  explicit IntegerPartition(std::vector<int> parts);

  static IntegerPartition ones(int n);

  int size() const;  // the integer being partitioned
  int rows() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  IntegerPartition conjugate() const;
  /// Hook length of box (row, col), both zero-based.
  int hook(int row, int col) const;
  std::string to_string() const;

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Number of disjoint cycles, fixed points included.
int cycle_count(const Permutation& sigma);
IntegerPartition cycle_type(const Permutation& sigma);

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<IntegerPartition> partitions_of(int n);

/// Size of the conjugacy class of cycle type mu: n! / z_mu.
Integer class_size(const IntegerPartition& mu);

/// Every element of S_alpha exactly once, in lexicographic order.
/// Throws std::length_error when alpha exceeds cap.
std::vector<Permutation> enumerate_group(int alpha, int cap = kEnumerationCap);

/// Irreducible character χ^λ evaluated on the class of cycle type μ.
/// Murnaghan–Nakayama rule on beta-sets, memoized per (λ, μ) for the life
/// of the process. Thread-safe.
std::int64_t mn_character(const IntegerPartition& lambda, const IntegerPartition& mu);

/// Dimension of the S_n irrep λ by the hook length formula.
Integer sym_irrep_dim(const IntegerPartition& lambda);

/// Dimension of the U(d) irrep λ (hook content formula), 0 when λ has more
/// than d rows.
Integer unitary_irrep_dim(const IntegerPartition& lambda, int d);

struct CycleLemmaReport {
  bool holds = false;
  std::int64_t saturating_count = 0;
};

/// Brute-force check of ξ(στ) + ξ(σ) <= α + 1 over S_α, τ the full cycle.
CycleLemmaReport verify_cycle_lemma(int alpha, int cap = kEnumerationCap);

/// Dense multiplication table of S_n with per-element cycle data. Elements
/// are indexed by lexicographic rank.
class GroupTable {
 public:
  explicit GroupTable(int n, int cap = kEnumerationCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Permutation& p) const { return static_cast<std::size_t>(p.rank()); }

  std::size_t multiply(std::size_t lhs, std::size_t rhs) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  int cycles(std::size_t i) const { return cycles_[i]; }
  /// Index into classes() of the element's cycle type.
  int class_of(std::size_t i) const { return class_[i]; }
  const std::vector<IntegerPartition>& classes() const { return classes_; }

 private:
  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<int> cycles_;
  std::vector<int> class_;
  std::vector<IntegerPartition> classes_;
};

}  // namespace entdesign
