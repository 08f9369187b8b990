/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sdpi {

/// Absolute tolerance on probability mass totals.
inline constexpr double kProbSumTol = 1e-9;

/// Probability vector over the finite alphabet {0, ..., n-1}.
///
/// Entries are nonnegative and sum to 1 within kProbSumTol. Immutable after
/// construction and safe to share across threads.
class Distribution {
 public:
  /// Validates and takes ownership. Throws std::invalid_argument on an empty
  /// vector, a NaN or negative entry, or a mass total off by more than
  /// kProbSumTol.
  explicit Distribution(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<double>& vec() const noexcept { return probs_; }

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> probs_;
};

}  // namespace sdpi
