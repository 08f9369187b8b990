/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

// Reference implementations used as independent oracles by the tests. They
// follow the defining formulas literally (plain summation in long double,
// textbook generators, no shared kernels with the library) so that agreement
// with the library is evidence, not tautology.

#include <cmath>
#include <limits>
#include <vector>

#include "sdpi/channel.hpp"
#include "sdpi/divergence.hpp"

namespace sdpi::testing {

inline long double naive_generator(DivergenceKind kind, long double t) {
  switch (kind) {
    case DivergenceKind::KL:
      return t <= 0.0L ? 0.0L : t * std::log(t);
    case DivergenceKind::TV:
      return std::abs(t - 1.0L) / 2.0L;
    case DivergenceKind::Chi2:
      return (t - 1.0L) * (t - 1.0L);
    case DivergenceKind::Hellinger2: {
      const long double s = 1.0L - std::sqrt(t);
      return s * s;
    }
  }
  return 0.0L;
}

inline long double naive_slope_at_infinity(DivergenceKind kind) {
  switch (kind) {
    case DivergenceKind::KL:
    case DivergenceKind::Chi2:
      return std::numeric_limits<long double>::infinity();
    case DivergenceKind::TV:
      return 0.5L;
    case DivergenceKind::Hellinger2:
      return 1.0L;
  }
  return 0.0L;
}

/// Literal sum of q f(p/q) with the boundary conventions.
inline double naive_df(DivergenceKind kind, const std::vector<double>& p,
                       const std::vector<double>& q) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] > 0.0) {
      acc += static_cast<long double>(q[i]) *
             naive_generator(kind, static_cast<long double>(p[i]) / q[i]);
    } else if (p[i] > 0.0) {
      acc += static_cast<long double>(p[i]) * naive_slope_at_infinity(kind);
    }
  }
  return static_cast<double>(acc);
}

inline std::vector<double> naive_push_forward(const Channel& channel,
                                              const std::vector<double>& input) {
  std::vector<double> out(channel.output_size(), 0.0);
  for (std::size_t x = 0; x < channel.input_size(); ++x) {
    for (std::size_t y = 0; y < out.size(); ++y) {
      out[y] += input[x] * channel.row(x)[y];
    }
  }
  return out;
}

inline double naive_ratio(const Channel& channel, DivergenceKind kind,
                          const std::vector<double>& p, const std::vector<double>& q) {
  return naive_df(kind, naive_push_forward(channel, p),
                  naive_push_forward(channel, q)) /
         naive_df(kind, p, q);
}

/// The binary-input ratio at (p, q) from the defining formulas.
inline double naive_binary_ratio(const std::vector<double>& row0,
                                 const std::vector<double>& row1, DivergenceKind kind,
                                 double p, double q) {
  std::vector<double> mp(row0.size()), mq(row0.size());
  for (std::size_t y = 0; y < row0.size(); ++y) {
    mp[y] = p * row0[y] + (1.0 - p) * row1[y];
    mq[y] = q * row0[y] + (1.0 - q) * row1[y];
  }
  return naive_df(kind, mp, mq) /
         naive_df(kind, {p, 1.0 - p}, {q, 1.0 - q});
}

/// Dense-grid oracle for the binary-input coefficient: an N x N scan over
/// (p, q) plus a near-diagonal sweep at offset delta evaluated in long
/// double. Slow and simple; the ground truth for the solver's values.
inline double naive_binary_eta(const std::vector<double>& row0,
                               const std::vector<double>& row1, DivergenceKind kind,
                               int grid = 1024, double delta = 1e-6) {
  const bool edges_ok = kind == DivergenceKind::TV || kind == DivergenceKind::Hellinger2;
  double best = 0.0;
  auto eval = [&](double p, double q) {
    const double den = naive_df(kind, {p, 1.0 - p}, {q, 1.0 - q});
    if (!(den > 0.0) || std::isinf(den)) return;
    const double r = naive_binary_ratio(row0, row1, kind, p, q);
    if (r > best) best = r;
  };
  for (int i = 0; i <= grid; ++i) {
    const double q = static_cast<double>(i) / grid;
    if (!edges_ok && (i == 0 || i == grid)) continue;
    for (int j = 0; j <= grid; ++j) {
      const double p = static_cast<double>(j) / grid;
      if (std::abs(p - q) < 16.0 * delta) continue;
      eval(p, q);
    }
  }
  // Near-diagonal sweep: the supremum may live in the p -> q limit.
  for (int i = 1; i < 8 * grid; ++i) {
    const double q = static_cast<double>(i) / (8 * grid);
    for (double offset : {delta, -delta}) {
      const double p = q + offset;
      if (p <= 0.0 || p >= 1.0) continue;
      eval(p, q);
    }
  }
  return best;
}

/// Mutual information of a joint table via the entropy decomposition,
/// independent of the library implementation.
inline double naive_mutual_information(const std::vector<std::vector<double>>& joint) {
  const std::size_t rows = joint.size(), cols = joint.front().size();
  std::vector<long double> ma(rows, 0.0L), mb(cols, 0.0L);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      ma[a] += joint[a][b];
      mb[b] += joint[a][b];
    }
  }
  auto entropy = [](const std::vector<long double>& v) {
    long double h = 0.0L;
    for (long double x : v) {
      if (x > 0.0L) h -= x * std::log(x);
    }
    return h;
  };
  std::vector<long double> flat;
  for (const auto& row : joint) {
    for (double v : row) flat.push_back(v);
  }
  return static_cast<double>(entropy(ma) + entropy(mb) - entropy(flat));
}

}  // namespace sdpi::testing
