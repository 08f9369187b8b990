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
#include <utility>
#include <vector>

#include "sdpi/channel.hpp"

namespace sdpi {

/// A chain X - Y - U with binary U: X takes the two letters of `pair`, with
/// weight p on the first; Y follows the channel row; U given Y = y is
/// Bernoulli(b[y]). Restricting X to two letters and U to two values loses
/// nothing for the reverse-direction coefficient, which is what post_eta
/// exploits.
struct PostProblem {
  Channel channel;
  std::pair<std::size_t, std::size_t> pair{0, 1};
  double p = 0.5;
  std::vector<double> b;
};

struct PostOptions {
  double tol = 1e-6;
  int p_grid = 64;                ///< grid over the binary input weight, interior of (0, 1)
  int starts = 16;                ///< random starts per (pair, p) cell
  int near_constant_starts = 4;   ///< b = c*1 + 1e-4*d starts per cell
  std::uint64_t budget = 20'000'000;  ///< total evaluation cap, split across cells
  std::uint64_t seed = 0;
  int threads = 0;
  std::size_t output_cap = 12;    ///< refuse larger output alphabets
  /// Evaluations with I(U;Y) below this many nats are treated as infeasible.
  /// The supremum can sit in the constant-b limit; the floor approaches it
  /// while keeping every reported ratio numerically trustworthy.
  double denominator_floor = 1e-9;
  int p_refine_rounds = 4;        ///< local refinement of p around the best cell
  int refine_starts = 4;
};

struct PostResult {
  double eta_post = 0.0;  ///< in [0, 1]; a lower estimate of the supremum
  PostProblem best;       ///< the achieving configuration found
  bool converged = false;
  std::uint64_t starts_used = 0;
  std::uint64_t evaluations = 0;
  double max_ratio_seen = 0.0;  ///< largest ratio evaluated anywhere in the search
};

/// I(U;X) / I(U;Y) for the chain. Throws std::domain_error when I(U;Y)
/// vanishes (U independent of Y) and std::invalid_argument on malformed
/// inputs.
double post_ratio(const PostProblem& problem);

/// Maximizes post_ratio over row pairs, a p grid, and b in [0,1]^|Y| via
/// multi-start coordinate pattern search. The result is a certified lower
/// estimate: the true supremum may be approached only in the constant-b
/// limit, which the near-constant starts chase but cannot attain.
PostResult post_eta(const Channel& channel, double tol, int starts,
                    std::uint64_t budget);
PostResult post_eta(const Channel& channel, const PostOptions& options);

}  // namespace sdpi
