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
#include <optional>
#include <utility>
#include <vector>

#include "sdpi/channel.hpp"
#include "sdpi/contraction.hpp"

namespace sdpi {

/// Outcome of a randomized domination check. Identical (channel, kind,
/// samples, seed) produce identical reports regardless of thread count.
struct OracleReport {
  std::uint64_t samples = 0;       ///< pairs drawn (after the finiteness filter)
  double max_ratio_found = 0.0;
  std::pair<std::vector<double>, std::vector<double>> achieving_pair;
  double reference_eta = 0.0;
  std::uint64_t violations = 0;    ///< samples exceeding reference_eta + slack
  double slack = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t rejected = 0;      ///< draws resampled by the finiteness filter
  std::uint64_t used = 0;          ///< samples that entered the comparison
};

/// The raw contraction ratio for a general admissible pair:
///   df(kind, P W, Q W) / df(kind, P, Q).
/// Throws std::invalid_argument when validate_pair rejects the pair.
double sample_ratio(const Channel& channel, DivergenceKind kind,
                    const Distribution& p, const Distribution& q);

struct VerifyOptions {
  double slack = 1e-6;
  int threads = 0;
  /// Pairs with input divergence below this many nats are resampled: their
  /// ratios carry no significant digits and the diagonal-limit regime they
  /// probe is already covered exactly by the solver.
  double min_divergence = 1e-9;
  std::optional<double> reference_eta;  ///< skip the internal eta_f call
  double tol = 1e-6;                    ///< tol for the internal eta_f call
};

/// Draws `samples` pairs from the flat measure on the simplex and checks
/// that no general-input ratio exceeds the two-letter optimum. A nonzero
/// violation count falsifies either the reduction or the implementation.
OracleReport verify_reduction(const Channel& channel, DivergenceKind kind,
                              std::uint64_t samples, std::uint64_t seed,
                              double slack);
OracleReport verify_reduction(const Channel& channel, DivergenceKind kind,
                              std::uint64_t samples, std::uint64_t seed,
                              const VerifyOptions& options);

/// df(kind, P W, Q W) - lambda * df(kind, P, Q). Throws std::domain_error
/// when the input divergence is infinite.
double lagrangian_gap(const Channel& channel, DivergenceKind kind,
                      const Distribution& p, const Distribution& q, double lambda);

struct DominationResult {
  bool found = false;
  std::pair<std::size_t, std::size_t> pair{0, 0};
  double p = 0.0;  ///< mass of the dominating input pair's first letter under P-hat
  double q = 0.0;  ///< same under Q-hat
  double gap = 0.0;
  double target_gap = 0.0;
};

/// Searches two-letter-supported pairs (P-hat, Q-hat) whose Lagrangian gap
/// dominates that of (P, Q) within tol. Candidates combine the exact
/// extreme points of the coupling constraint sum_x (P(x)/Q(x)) Q-hat(x) = 1
/// with a weight grid (1024 points, 3 zoom rounds); for divergences that
/// tolerate support violations, unconstrained binary pairs are searched as
/// well. Throws std::domain_error when df(P, Q) is zero or infinite and
/// std::invalid_argument for lambda outside [0, 1].
DominationResult binary_dominates(const Channel& channel, DivergenceKind kind,
                                  const Distribution& p, const Distribution& q,
                                  double lambda, double tol);

/// Samples general pairs and counts points whose (d_in, d_out) image rises
/// above the envelope curve by more than slack. Points beyond the last hull
/// vertex are outside the represented window and are discarded.
OracleReport envelope_dominates(const Channel& channel, DivergenceKind kind,
                                const EnvelopeCurve& curve, std::uint64_t samples,
                                std::uint64_t seed, double slack);
OracleReport envelope_dominates(const Channel& channel, DivergenceKind kind,
                                const EnvelopeCurve& curve, std::uint64_t samples,
                                std::uint64_t seed, const VerifyOptions& options);

}  // namespace sdpi
