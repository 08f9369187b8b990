/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace sdpi {

/// SplitMix64 finalizer. Used to derive independent stream states from
/// (seed, stream) keys so that parallel sampling is schedule-independent.
constexpr std::uint64_t hash64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Small deterministic generator (SplitMix64 sequence).
///
/// Results depend only on (seed, stream) and the order of draws within one
/// stream, never on thread scheduling. All randomness in the library flows
/// through explicit seeds; there is no global or time-based state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(hash64(seed + 0x9e3779b97f4a7c15ULL)) {}

  Rng(std::uint64_t seed, std::uint64_t stream) noexcept
      : state_(hash64(hash64(seed + 0x9e3779b97f4a7c15ULL) ^
                      hash64(stream + 0x6a09e667f3bcc909ULL))) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  /// Standard exponential via inversion.
  double exponential() noexcept { return -std::log(uniform_open()); }

  /// Flat (symmetric Dirichlet) draw on the probability simplex via
  /// normalized exponential spacings.
  void fill_simplex(std::span<double> out) noexcept {
    double sum = 0.0;
    for (double& v : out) {
      v = exponential();
      sum += v;
    }
    if (sum <= 0.0) {  // all draws hit the zero corner; fall back to uniform
      const double u = 1.0 / static_cast<double>(out.size());
      for (double& v : out) v = u;
      return;
    }
    for (double& v : out) v /= sum;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sdpi
