/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "sdpi/divergence.hpp"

namespace sdpi::detail {

/// Fused ratio evaluator for one row pair. The mixture difference is formed
/// analytically as (p - q) * (row0 - row1), never by subtracting mixtures,
/// so evaluations keep full relative accuracy down to |p - q| ~ 1e-5.
class RatioEvaluator {
 public:
  RatioEvaluator(std::span<const double> r0, std::span<const double> r1,
                 DivergenceKind kind)
      : kind_(kind), n_(r0.size()), r0_(r0), r1_(r1) {
    diff_.resize(n_);
    mq_.resize(n_);
    w_.resize(n_);
    CompensatedSum tv;
    for (std::size_t y = 0; y < n_; ++y) {
      diff_[y] = r0[y] - r1[y];
      tv.add(std::abs(diff_[y]));
    }
    tv_rows_ = 0.5 * tv.value();
  }

  DivergenceKind kind() const noexcept { return kind_; }
  double tv_rows() const noexcept { return tv_rows_; }

  /// Prepares the q-dependent terms; q must be admissible for the kind.
  void set_q(double q) noexcept {
    q_ = q;
    const double qc = 1.0 - q;
    for (std::size_t y = 0; y < n_; ++y) {
      mq_[y] = q * r0_[y] + qc * r1_[y];
    }
    switch (kind_) {
      case DivergenceKind::KL:
        for (std::size_t y = 0; y < n_; ++y) {
          w_[y] = mq_[y] > 0.0 ? diff_[y] / mq_[y] : 0.0;
        }
        break;
      case DivergenceKind::Chi2: {
        CompensatedSum s;
        for (std::size_t y = 0; y < n_; ++y) {
          if (mq_[y] > 0.0) s.add(diff_[y] * diff_[y] / mq_[y]);
        }
        chi2_sum_ = s.value();
        break;
      }
      default:
        break;
    }
  }

  double q() const noexcept { return q_; }

  /// Output divergence df(kind, M_p, M_q) with d = p - q.
  double numerator(double p, double d) const noexcept {
    switch (kind_) {
      case DivergenceKind::KL: {
        CompensatedSum acc;
        for (std::size_t y = 0; y < n_; ++y) {
          const double dm = d * diff_[y];
          const double mp = mq_[y] + dm;
          if (mp <= 0.0) continue;  // f(0) contributes 0
          acc.add(mp * std::log1p(d * w_[y]));
        }
        return std::max(0.0, acc.value());
      }
      case DivergenceKind::TV:
        return std::abs(d) * tv_rows_;
      case DivergenceKind::Chi2:
        return d * d * chi2_sum_;
      case DivergenceKind::Hellinger2: {
        CompensatedSum acc;
        for (std::size_t y = 0; y < n_; ++y) {
          const double dm = d * diff_[y];
          double mp = mq_[y] + dm;
          if (mp < 0.0) mp = 0.0;
          const double s = std::sqrt(mp) + std::sqrt(mq_[y]);
          if (s <= 0.0) continue;
          const double r = dm / s;
          acc.add(r * r);
        }
        return std::max(0.0, acc.value());
      }
    }
    return 0.0;  // unreachable
  }

  /// Ratio at (p, q()) with d = p - q(). Returns -1 when the point is
  /// inadmissible (zero or infinite input divergence).
  double ratio(double p, double d) const noexcept {
    const double den = binary_divergence(kind_, p, q_, d);
    if (!(den > 0.0) || std::isinf(den)) return -1.0;
    return numerator(p, d) / den;
  }

  /// Limit of the ratio as p -> q; valid for q in (0, 1). Terms where both
  /// rows vanish are skipped. The value does not depend on the divergence.
  double limit_at(double q) const noexcept {
    const double qc = 1.0 - q;
    CompensatedSum acc;
    for (std::size_t y = 0; y < n_; ++y) {
      const double m = q * r0_[y] + qc * r1_[y];
      if (m <= 0.0) continue;
      acc.add(diff_[y] * diff_[y] / m);
    }
    return std::max(0.0, q * qc * acc.value());
  }

 private:
  DivergenceKind kind_;
  std::size_t n_;
  std::span<const double> r0_, r1_;
  std::vector<double> diff_, mq_, w_;
  double q_ = 0.0;
  double chi2_sum_ = 0.0;
  double tv_rows_ = 0.0;
};

}  // namespace sdpi::detail
