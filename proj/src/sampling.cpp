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

#include "entdesign/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace entdesign {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(mix_seed(seed, stream)) {}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::normal() {
  if (spare_) {
    const double out = *spare_;
    spare_.reset();
    return out;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

int worker_threads() {
  if (const char* env = std::getenv("ENTDESIGN_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct RunningStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  static RunningStats merge(const RunningStats& a, const RunningStats& b) {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    RunningStats out;
    out.count = a.count + b.count;
    const double delta = b.mean - a.mean;
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    const double n = static_cast<double>(out.count);
    out.mean = a.mean + delta * nb / n;
    out.m2 = a.m2 + b.m2 + delta * delta * na * nb / n;
    return out;
  }
};

}  // namespace

McEstimate monte_carlo(std::int64_t n, const RandomStream& rng, const std::function<double(RandomStream&)>& f) {
  if (n < 2) throw std::invalid_argument("Monte Carlo estimate needs n >= 2 samples");
  const std::int64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<RunningStats> stats(static_cast<std::size_t>(chunks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::int64_t c = next++; c < chunks; c = next++) {
        RandomStream stream = rng.substream(static_cast<std::uint64_t>(c));
        const std::int64_t begin = c * kChunkSize;
        const std::int64_t end = std::min(n, begin + kChunkSize);
        RunningStats local;
        for (std::int64_t i = begin; i < end; ++i) local.add(f(stream));
        stats[static_cast<std::size_t>(c)] = local;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };

  const int threads = static_cast<int>(std::min<std::int64_t>(worker_threads(), chunks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Pairwise tree reduction in chunk order.
  while (stats.size() > 1) {
    std::vector<RunningStats> merged;
    merged.reserve((stats.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < stats.size(); i += 2) merged.push_back(RunningStats::merge(stats[i], stats[i + 1]));
    if (stats.size() % 2 == 1) merged.push_back(stats.back());
    stats = std::move(merged);
  }
  const RunningStats& total = stats.front();
  McEstimate out;
  out.mean = total.mean;
  out.n_samples = total.count;
  out.seed = rng.seed();
  const double variance = total.m2 / static_cast<double>(total.count - 1);
  out.std_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(total.count));
  return out;
}

PureState sample_haar_state(int d, RandomStream& rng, Dims dims) {
  if (d < 1) throw std::invalid_argument("state dimension must be >= 1");
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  v.normalize();
  return PureState(std::move(v), std::move(dims));
}

UnitaryMatrix sample_haar_unitary(int d, RandomStream& rng) {
  if (d < 1) throw std::invalid_argument("unitary dimension must be >= 1");
  ComplexMatrix z(d, d);
  // Column-major fill order is part of the reproducibility contract.
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    const Complex phase = mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

namespace {

void check_samples(std::int64_t n) {
  if (n < 100) throw std::invalid_argument("Monte Carlo moment estimates need n >= 100 samples");
}

McEstimate exact_one(std::int64_t n, const RandomStream& rng) { return {1.0, 0.0, n, rng.seed()}; }

}  // namespace

McEstimate mc_state_moment(const StatePartition& p, int alpha, std::int64_t n, const RandomStream& rng) {
  p.validate();
  check_samples(n);
  if (alpha < 1) throw std::invalid_argument("moment order must be >= 1");
  if (alpha == 1) return exact_one(n, rng);
  return monte_carlo(n, rng, [&](RandomStream& s) {
    const auto psi = sample_haar_state(p.total(), s, {p.d_A, p.d_B});
    return trace_power(reduced_density(psi, {0}), alpha);
  });
}

McEstimate mc_choi_moment(const ChoiPartitionSpec& p, int alpha, std::int64_t n, const RandomStream& rng) {
  p.validate();
  check_samples(n);
  if (alpha < 1) throw std::invalid_argument("moment order must be >= 1");
  if (alpha == 1) return exact_one(n, rng);
  return monte_carlo(n, rng, [&](RandomStream& s) {
    const auto u = sample_haar_unitary(p.total(), s);
    return trace_power(reduced_density(choi_state(u, p), {0, 2}), alpha);
  });
}

McEstimate mc_entropy_average(AverageTarget target, const PartitionContext& partition, const EntropyOrder& order,
                              std::int64_t n, const RandomStream& rng) {
  check_samples(n);
  if (target == AverageTarget::state) {
    const auto* p = std::get_if<StatePartition>(&partition);
    if (!p) throw std::invalid_argument("state entropy average needs a StatePartition");
    p->validate();
    return monte_carlo(n, rng, [&](RandomStream& s) {
      const auto psi = sample_haar_state(p->total(), s, {p->d_A, p->d_B});
      return entropy_bits(reduced_density(psi, {0}), order);
    });
  }
  const auto* p = std::get_if<ChoiPartitionSpec>(&partition);
  if (!p) throw std::invalid_argument("Choi entropy average needs a ChoiPartitionSpec");
  p->validate();
  return monte_carlo(n, rng, [&](RandomStream& s) {
    const auto u = sample_haar_unitary(p->total(), s);
    return entropy_bits(reduced_density(choi_state(u, *p), {0, 2}), order);
  });
}

}  // namespace entdesign
