/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/post_sdpi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdpi/divergence.hpp"
#include "sdpi/parallel.hpp"
#include "sdpi/random.hpp"

namespace sdpi {

namespace {

/// Stable D(Ber(a) || Ber(u)) in nats with the difference d = a - u supplied
/// analytically; u must lie in (0, 1).
double bernoulli_kl(double a, double u, double d) {
  double acc = 0.0;
  if (a > 0.0) acc += a * std::log1p(d / u);
  if (a < 1.0) acc += (1.0 - a) * std::log1p(-d / (1.0 - u));
  return std::max(0.0, acc);
}

/// One (pair, p) slice of the search: fixed rows and input weight, the
/// soft-decision vector b varies.
class PostCell {
 public:
  PostCell(const Channel& channel, std::size_t x, std::size_t xp, double p)
      : rx_(channel.row(x).probs()), rxp_(channel.row(xp).probs()), p_(p) {
    const std::size_t m = rx_.size();
    py_.resize(m);
    rdiff_.resize(m);
    for (std::size_t y = 0; y < m; ++y) {
      py_[y] = p * rx_[y] + (1.0 - p) * rxp_[y];
      rdiff_[y] = rx_[y] - rxp_[y];
    }
  }

  /// (I(U;X), I(U;Y)) in nats. I(U;X) uses the conditional-KL form with the
  /// deltas a_x - u = (1-p) * da and a_x' - u = -p * da carried analytically,
  /// which survives the near-constant-b regime.
  std::pair<double, double> mutual_infos(std::span<const double> b) const {
    detail::CompensatedSum a0_sum, da_sum;
    for (std::size_t y = 0; y < b.size(); ++y) {
      a0_sum.add(rx_[y] * b[y]);
      da_sum.add(rdiff_[y] * b[y]);
    }
    const double a0 = std::clamp(a0_sum.value(), 0.0, 1.0);
    const double da = da_sum.value();
    const double a1 = std::clamp(a0 - da, 0.0, 1.0);
    const double u = std::clamp(a0 - (1.0 - p_) * da, 0.0, 1.0);
    if (u <= 0.0 || u >= 1.0) return {0.0, 0.0};  // U almost surely constant
    const double ix = p_ * bernoulli_kl(a0, u, (1.0 - p_) * da) +
                      (1.0 - p_) * bernoulli_kl(a1, u, -p_ * da);
    detail::CompensatedSum iy;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (py_[y] <= 0.0) continue;
      iy.add(py_[y] * bernoulli_kl(b[y], u, b[y] - u));
    }
    return {ix, std::max(0.0, iy.value())};
  }

  /// Ratio, or -1 when I(U;Y) falls below the floor.
  double ratio(std::span<const double> b, double floor) const {
    const auto [ix, iy] = mutual_infos(b);
    if (iy < floor || iy <= 0.0) return -1.0;
    return ix / iy;
  }

  std::size_t output_size() const { return py_.size(); }

 private:
  std::span<const double> rx_, rxp_;
  double p_;
  std::vector<double> py_, rdiff_;
};

struct SearchOutcome {
  double value = -1.0;
  std::vector<double> b;
  bool budget_hit = false;
  std::uint64_t evaluations = 0;
  double max_seen = 0.0;
};

/// Coordinate pattern search from b0; deterministic given the start.
SearchOutcome pattern_search(const PostCell& cell, std::vector<double> b,
                             std::uint64_t cap, double floor) {
  SearchOutcome out;
  auto eval = [&](const std::vector<double>& v) -> double {
    if (out.evaluations >= cap) {
      out.budget_hit = true;
      return -2.0;
    }
    ++out.evaluations;
    const double r = cell.ratio(v, floor);
    if (r > out.max_seen) out.max_seen = r;
    return r;
  };
  double cur = eval(b);
  if (cur == -2.0) {
    out.b = std::move(b);
    return out;
  }
  double step = 0.25;
  bool stopped = false;
  while (step >= 1e-7 && !stopped) {
    bool improved = false;
    for (std::size_t y = 0; y < b.size() && !stopped; ++y) {
      for (double s : {step, -step}) {
        const double old = b[y];
        const double moved = std::clamp(old + s, 0.0, 1.0);
        if (moved == old) continue;
        b[y] = moved;
        const double r = eval(b);
        if (r == -2.0) {
          b[y] = old;
          stopped = true;
          break;
        }
        if (r > cur) {
          cur = r;
          improved = true;
          break;  // keep the move, go to the next coordinate
        }
        b[y] = old;
      }
    }
    if (!improved) step *= 0.5;
  }
  out.value = cur;
  out.b = std::move(b);
  return out;
}

std::vector<double> random_start(Rng& rng, std::size_t m, bool near_constant) {
  std::vector<double> b(m);
  if (near_constant) {
    const double c = 0.2 + 0.6 * rng.uniform();
    for (double& v : b) {
      v = std::clamp(c + 1e-4 * (2.0 * rng.uniform() - 1.0), 0.0, 1.0);
    }
  } else {
    for (double& v : b) v = rng.uniform();
  }
  return b;
}

}  // namespace

double post_ratio(const PostProblem& problem) {
  const Channel& channel = problem.channel;
  if (channel.input_size() < 2) {
    throw std::invalid_argument("post_ratio: channel needs at least two inputs");
  }
  const auto [x, xp] = problem.pair;
  if (x >= channel.input_size() || xp >= channel.input_size() || x == xp) {
    throw std::invalid_argument("post_ratio: invalid input pair");
  }
  if (!(problem.p > 0.0 && problem.p < 1.0)) {
    throw std::invalid_argument("post_ratio: p must lie in (0, 1)");
  }
  if (problem.b.size() != channel.output_size()) {
    throw std::invalid_argument("post_ratio: b has wrong length");
  }
  for (double v : problem.b) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
      throw std::invalid_argument("post_ratio: b entries must lie in [0, 1]");
    }
  }
  const PostCell cell(channel, x, xp, problem.p);
  const auto [ix, iy] = cell.mutual_infos(problem.b);
  if (iy <= 0.0) {
    throw std::domain_error("post_ratio: I(U;Y) vanishes, ratio undefined");
  }
  return ix / iy;
}

PostResult post_eta(const Channel& channel, double tol, int starts,
                    std::uint64_t budget) {
  PostOptions options;
  options.tol = tol;
  options.starts = starts;
  options.budget = budget;
  return post_eta(channel, options);
}

PostResult post_eta(const Channel& channel, const PostOptions& options) {
  if (channel.input_size() < 2) {
    throw std::invalid_argument("post_eta: channel needs at least two inputs");
  }
  if (channel.output_size() > options.output_cap) {
    throw std::invalid_argument("post_eta: output alphabet exceeds the cap of " +
                                std::to_string(options.output_cap));
  }
  if (!(options.tol > 0.0)) throw std::invalid_argument("post_eta: tol must be positive");

  const std::size_t n = channel.input_size();
  const std::size_t m = channel.output_size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  const int p_grid = std::max(1, options.p_grid);
  const int cell_starts = std::max(1, options.starts) +
                          std::max(0, options.near_constant_starts);
  const std::size_t tasks = pairs.size() * static_cast<std::size_t>(p_grid) *
                            static_cast<std::size_t>(cell_starts);
  const std::uint64_t per_task_cap =
      std::max<std::uint64_t>(400, options.budget / std::max<std::size_t>(1, tasks));

  auto p_value = [&](int k) {
    return static_cast<double>(k + 1) / static_cast<double>(p_grid + 1);
  };

  std::vector<SearchOutcome> outs(tasks);
  parallel_for(tasks, options.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      const std::size_t pair_idx = t / (static_cast<std::size_t>(p_grid) * cell_starts);
      const std::size_t rem = t % (static_cast<std::size_t>(p_grid) * cell_starts);
      const int p_idx = static_cast<int>(rem / cell_starts);
      const int start_idx = static_cast<int>(rem % cell_starts);
      const PostCell cell(channel, pairs[pair_idx].first, pairs[pair_idx].second,
                          p_value(p_idx));
      Rng rng(options.seed, t);
      auto b0 = random_start(rng, m, start_idx >= options.starts);
      outs[t] = pattern_search(cell, std::move(b0), per_task_cap,
                               options.denominator_floor);
    }
  });

  std::uint64_t starts_used = tasks;
  std::uint64_t evaluations = 0;
  double max_ratio_seen = 0.0;
  bool budget_hit = false;
  std::size_t best_task = 0;
  double best_value = -1.0;
  for (std::size_t t = 0; t < tasks; ++t) {
    budget_hit |= outs[t].budget_hit;
    evaluations += outs[t].evaluations;
    max_ratio_seen = std::max(max_ratio_seen, outs[t].max_seen);
    if (outs[t].value > best_value) {
      best_value = outs[t].value;
      best_task = t;
    }
  }

  std::size_t best_pair_idx =
      best_task / (static_cast<std::size_t>(p_grid) * cell_starts);
  double best_p =
      p_value(static_cast<int>(best_task % (static_cast<std::size_t>(p_grid) * cell_starts) /
                               cell_starts));
  std::vector<double> best_b = outs[best_task].b;

  // Local refinement of the input weight around the winning cell. Each round
  // halves the probe distance; the warm start reuses the best b found.
  double final_round_delta = 0.0;
  std::uint64_t refine_counter = tasks;
  double probe = 1.0 / static_cast<double>(p_grid + 1);
  for (int round = 0; round < options.p_refine_rounds; ++round) {
    probe *= 0.5;
    final_round_delta = 0.0;
    for (double candidate_p :
         {std::clamp(best_p - probe, 1e-6, 1.0 - 1e-6),
          std::clamp(best_p + probe, 1e-6, 1.0 - 1e-6)}) {
      if (candidate_p == best_p) continue;
      const PostCell cell(channel, pairs[best_pair_idx].first,
                          pairs[best_pair_idx].second, candidate_p);
      for (int s = 0; s < std::max(1, options.refine_starts); ++s) {
        Rng rng(options.seed, refine_counter++);
        std::vector<double> b0 =
            s == 0 ? best_b : random_start(rng, m, false);
        auto out = pattern_search(cell, std::move(b0), per_task_cap,
                                  options.denominator_floor);
        budget_hit |= out.budget_hit;
        evaluations += out.evaluations;
        max_ratio_seen = std::max(max_ratio_seen, out.max_seen);
        ++starts_used;
        if (out.value > best_value) {
          final_round_delta = std::max(final_round_delta, out.value - best_value);
          best_value = out.value;
          best_p = candidate_p;
          best_b = out.b;
        }
      }
    }
  }

  return PostResult{
      std::clamp(std::max(best_value, 0.0), 0.0, 1.0),
      PostProblem{channel, pairs[best_pair_idx], best_p, std::move(best_b)},
      !budget_hit && final_round_delta < options.tol,
      starts_used,
      evaluations,
      max_ratio_seen,
  };
}

}  // namespace sdpi
