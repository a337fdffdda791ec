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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <variant>

#include "entdesign/moments.hpp"
#include "entdesign/quantum.hpp"

namespace entdesign {

/// Seeded, reproducible random source.
///
/// The engine is std::mt19937_64 seeded with splitmix64(seed) mixed with the
/// substream index. Uniform doubles take the top 53 bits of one draw; normals
/// come from the Box–Muller transform (both values of a pair are used). For a
/// given build the sequence for (seed, stream) is bit-identical from run to run.
class RandomStream {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/splitmix64-substreams/box-muller";

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Independent stream for chunk or thread `index`, derived from the seed only.
  RandomStream substream(std::uint64_t index) const { return RandomStream(seed_, index + 1); }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double normal();
  /// Real and imaginary parts independent N(0, 1).
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Samples per reproducibility chunk; chunk k always uses substream k.
inline constexpr std::int64_t kChunkSize = 1024;

/// Worker threads for Monte Carlo loops: ENTDESIGN_THREADS if set, otherwise
/// the hardware concurrency. Results never depend on this value.
int worker_threads();

/// Sample mean and standard error of f over n draws. Chunk statistics are
/// merged pairwise in a fixed order, so the result is bit-identical for any
/// thread count.
McEstimate monte_carlo(std::int64_t n, const RandomStream& rng, const std::function<double(RandomStream&)>& f);

/// Uniform (Haar) random unit vector: 2d independent normals, normalized.
PureState sample_haar_state(int d, RandomStream& rng, Dims dims = {});

/// Haar random unitary: complex Ginibre matrix, QR, then the phases of R's
/// diagonal divided out.
UnitaryMatrix sample_haar_unitary(int d, RandomStream& rng);

/// Monte Carlo estimate of the Haar average of tr ρ_A^α. n >= 100.
McEstimate mc_state_moment(const StatePartition& p, int alpha, std::int64_t n, const RandomStream& rng);

/// Monte Carlo estimate of the Haar average of tr ρ_AC^α on Choi states. n >= 100.
McEstimate mc_choi_moment(const ChoiPartitionSpec& p, int alpha, std::int64_t n, const RandomStream& rng);

enum class AverageTarget { state, choi };

/// Monte Carlo average of the chosen entropy (bits) of ρ_A (state target) or
/// ρ_AC (Choi target). The partition must match the target.
McEstimate mc_entropy_average(AverageTarget target, const PartitionContext& partition, const EntropyOrder& order,
                              std::int64_t n, const RandomStream& rng);

}  // namespace entdesign
