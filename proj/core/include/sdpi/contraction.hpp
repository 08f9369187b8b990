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
#include <optional>
#include <utility>
#include <vector>

#include "sdpi/binary_solver.hpp"
#include "sdpi/channel.hpp"

namespace sdpi {

/// The squared-Hellinger sandwich around the KL coefficient:
///   lower = d/2,  upper_g = g(d/2),  upper_diam = d,
/// with d the Hellinger diameter of the channel and g(t) = 2t(1 - t/2).
struct SandwichBounds {
  double lower;
  double upper_g;
  double upper_diam;
};

struct PairEta {
  std::size_t x;
  std::size_t xp;
  double eta;
};

struct ContractionResult {
  double eta = 0.0;  ///< in [0, 1]
  DivergenceKind kind = DivergenceKind::KL;
  std::pair<std::size_t, std::size_t> best_pair{0, 0};  ///< lexicographic argmax
  BinarySolution arg;                            ///< solution for best_pair
  std::optional<SandwichBounds> bounds;          ///< populated for KL
  std::optional<std::vector<PairEta>> per_pair_etas;
  bool any_budget_exhausted = false;
  bool any_anomaly = false;
};

struct EtaOptions {
  double tol = 1e-6;
  SolveOptions solver{};
  int threads = 0;  ///< 0 = hardware
  /// The per-pair table is kept when input_size <= per_pair_cap
  /// (or always, with force_per_pair); it is quadratic in the input size.
  std::size_t per_pair_cap = 64;
  bool force_per_pair = false;
};

/// Contraction coefficient of the channel: two-letter input pairs attain the
/// supremum, so the search is the maximum of solve_binary over all unordered
/// row pairs (evaluated concurrently, reduced deterministically). A channel
/// with a single input letter has no admissible pair and returns 0.
ContractionResult eta_f(const Channel& channel, DivergenceKind kind, double tol);
ContractionResult eta_f(const Channel& channel, DivergenceKind kind,
                        const EtaOptions& options);

/// Maximum squared Hellinger distance between any two rows; in [0, 2].
double hellinger_diameter(const Channel& channel);

/// The bounds triple derived from the Hellinger diameter.
SandwichBounds sandwich_bounds(const Channel& channel);

/// Upper concave boundary of achievable (input divergence, output
/// divergence) points over a finite window.
struct EnvelopeCurve {
  std::vector<std::pair<double, double>> vertices;  ///< (d_in, d_out), first is (0,0)
  DivergenceKind kind = DivergenceKind::KL;
  double window_max = 0.0;

  /// Piecewise-linear interpolation; clamps to the last vertex beyond it
  /// (callers treat points past the last vertex as outside the window).
  double value_at(double d_in) const;

  /// Maximum d_out / d_in over vertices other than (0, 0); equals the
  /// contraction coefficient when the sampling grid captures the small
  /// d_in limit.
  double max_chord_slope() const;
};

struct EnvelopeGrid {
  int p_grid = 64;
  int q_grid = 64;
  /// Near-diagonal samples capture the envelope slope at the origin, where
  /// grid cells alone lose it to the vanishing divergences.
  int near_diag_grid = 128;
  std::vector<double> near_diag_offsets{1e-3, 1e-4};
  /// Geometric approach points toward the q edges; they extend the sampled
  /// d_in range up to window_max for the unbounded divergences.
  int edge_grid = 32;
};

/// Samples binary input pairs on every row pair, maps each admissible point
/// to (df_binary(kind, p, q), df(kind, mixture_p, mixture_q)), restricts to
/// d_in <= window_max, adds (0, 0), and returns the upper hull. The curve is
/// anchored at the window boundary by bisection along the p edges whenever
/// the divergence can reach it. Throws std::domain_error when no sampled
/// point lands inside the window.
EnvelopeCurve trace_envelope(const Channel& channel, DivergenceKind kind,
                             double window_max, const EnvelopeGrid& grid = {});

}  // namespace sdpi
