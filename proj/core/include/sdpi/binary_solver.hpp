/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <cstdint>
#include <vector>

#include "sdpi/distribution.hpp"
#include "sdpi/divergence.hpp"

namespace sdpi {

/// Two channel rows viewed as a binary-input subchannel. The contraction
/// coefficient of the full channel is the maximum of this problem over all
/// row pairs, so this is the inner optimization everything reduces to.
struct BinaryProblem {
  Distribution row0;
  Distribution row1;
  DivergenceKind kind;
};

/// Deterministic grid-and-zoom search parameters. The defaults cost about
/// coarse_grid^2 + keep_cells * zoom_rounds * zoom_grid^2 ratio evaluations.
struct SolveOptions {
  int coarse_grid = 512;    ///< N for the N x N scan over (p, q)
  int diag_grid = 512;      ///< points for the q -> p limit scan
  int keep_cells = 16;      ///< grid cells refined by zooming
  int keep_diag = 4;        ///< limit-scan points refined by zooming
  int zoom_grid = 64;       ///< points per axis inside a zoom window
  int zoom_rounds = 4;      ///< minimum zoom rounds; more when tol demands
  double window_shrink = 8.0;
  std::uint64_t budget = 4'000'000;  ///< evaluation cap
  bool tv_fast_path = true;  ///< closed form for TV; the ratio is constant in (p, q)
  /// The 2-D scan keeps |p - q| >= diagonal_band; closer points lose all
  /// significant digits to cancellation and the band is covered exactly by
  /// the limit scan.
  double diagonal_band = 1e-5;
};

struct BinarySolution {
  double eta = 0.0;    ///< in [0, 1]
  double arg_p = 0.0;  ///< equals arg_q when on_diagonal
  double arg_q = 0.0;
  bool on_diagonal = false;  ///< supremum located by the q -> p limit scan
  std::uint64_t evaluations = 0;
  double achieved_tol = 0.0;  ///< final grid spacing around the maximizer
  bool budget_exhausted = false;
  bool anomaly = false;   ///< raw maximum exceeded 1 + 1e-9 before clamping
  double raw_max = 0.0;   ///< best value before clamping to [0, 1]
  std::vector<double> round_etas;  ///< running maximum after each round
};

/// The contraction ratio at an admissible point:
///   df(kind, p*row0 + (1-p)*row1, q*row0 + (1-q)*row1) / df_binary(kind, p, q).
/// Throws std::domain_error when the input divergence is zero or infinite.
double ratio_at(const BinaryProblem& problem, double p, double q);

/// Limit of the ratio as p -> q, for divergences with finite positive f''(1):
///   q(1-q) * sum_y (row0[y] - row1[y])^2 / M_q[y],  M_q = q*row0 + (1-q)*row1,
/// with terms skipped when both rows vanish at y. The limit does not depend
/// on the divergence because numerator and denominator share the factor
/// f''(1)/2. Throws std::domain_error for TV or q outside (0, 1).
double diagonal_limit(const BinaryProblem& problem, double q);

/// Maximizes the ratio over the admissible region: the interior of (0,1)^2
/// off the diagonal, the p edges, the q edges where the input divergence
/// stays finite (TV and Hellinger2 only), and the diagonal limit. Runs a
/// coarse scan, keeps the best candidates, and zooms until the grid spacing
/// falls below tol (at least zoom_rounds rounds). Exhausting the budget is
/// not an error: the best estimate is returned with budget_exhausted set.
BinarySolution solve_binary(const BinaryProblem& problem, double tol,
                            std::uint64_t budget);
BinarySolution solve_binary(const BinaryProblem& problem, double tol,
                            const SolveOptions& options);

}  // namespace sdpi
