/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sdpi {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("distribution: empty probability vector");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double v = probs_[i];
    if (std::isnan(v)) {
      throw std::invalid_argument("distribution: NaN entry at index " + std::to_string(i));
    }
    if (v < 0.0) {
      throw std::invalid_argument("distribution: negative entry at index " +
                                  std::to_string(i));
    }
    if (std::isinf(v)) {
      throw std::invalid_argument("distribution: infinite entry at index " +
                                  std::to_string(i));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::invalid_argument("distribution: entries sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-9");
  }
}

}  // namespace sdpi
