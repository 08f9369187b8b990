/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/binary_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ratio_evaluator.hpp"

namespace sdpi {

namespace {

// Interior clamp for q under KL/Chi2, where the q edges make the input
// divergence infinite.
constexpr double kQMin = 1e-12;

// A q edge (q in {0, 1}) keeps the input divergence finite only for TV and
// Hellinger2.
bool q_edges_admissible(DivergenceKind kind) {
  return !infinite_on_support_violation(kind);
}

struct Candidate {
  double value;
  double p;
  double q;
};

/// Keeps the k best candidates; ties favor smaller (q, p).
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  void push(double value, double p, double q) {
    if (items_.size() < k_) {
      items_.push_back({value, p, q});
      std::push_heap(items_.begin(), items_.end(), better);
      return;
    }
    if (k_ == 0 || !better(Candidate{value, p, q}, items_.front())) return;
    std::pop_heap(items_.begin(), items_.end(), better);
    items_.back() = {value, p, q};
    std::push_heap(items_.begin(), items_.end(), better);
  }

  std::vector<Candidate> sorted() && {
    std::sort(items_.begin(), items_.end(), better);
    return std::move(items_);
  }

 private:
  // Strict weak order: larger value first, then smaller coordinates.
  static bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  }

  std::size_t k_;
  std::vector<Candidate> items_;
};

std::vector<double> linspace(double lo, double hi, int m) {
  std::vector<double> out;
  if (m <= 1 || lo >= hi) {
    out.push_back(lo);
    return out;
  }
  out.reserve(static_cast<std::size_t>(m));
  const double step = (hi - lo) / static_cast<double>(m - 1);
  for (int i = 0; i < m; ++i) {
    out.push_back(i + 1 == m ? hi : lo + step * i);
  }
  return out;
}

void check_problem(const BinaryProblem& problem) {
  if (problem.row0.size() != problem.row1.size()) {
    throw std::invalid_argument("binary problem: row length mismatch");
  }
}

}  // namespace

double ratio_at(const BinaryProblem& problem, double p, double q) {
  check_problem(problem);
  if (std::isnan(p) || std::isnan(q)) throw std::invalid_argument("ratio_at: NaN input");
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0) {
    throw std::invalid_argument("ratio_at: (p, q) must lie in [0, 1]^2");
  }
  const double d = p - q;
  const double den = detail::binary_divergence(problem.kind, p, q, d);
  if (!(den > 0.0)) {
    throw std::domain_error("ratio_at: input divergence is zero at (p, q)");
  }
  if (std::isinf(den)) {
    throw std::domain_error("ratio_at: input divergence is infinite at (p, q)");
  }
  detail::RatioEvaluator ev(problem.row0.probs(), problem.row1.probs(), problem.kind);
  ev.set_q(q);
  return ev.numerator(p, d) / den;
}

double diagonal_limit(const BinaryProblem& problem, double q) {
  check_problem(problem);
  if (!has_curvature(problem.kind)) {
    throw std::domain_error("diagonal_limit: undefined curvature for tv");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("diagonal_limit: q must lie in (0, 1)");
  }
  detail::RatioEvaluator ev(problem.row0.probs(), problem.row1.probs(), problem.kind);
  return ev.limit_at(q);
}

BinarySolution solve_binary(const BinaryProblem& problem, double tol,
                            std::uint64_t budget) {
  SolveOptions options;
  options.budget = budget;
  return solve_binary(problem, tol, options);
}

BinarySolution solve_binary(const BinaryProblem& problem, double tol,
                            const SolveOptions& options) {
  check_problem(problem);
  if (!(tol > 0.0)) throw std::invalid_argument("solve_binary: tol must be positive");

  BinarySolution solution;

  if (problem.kind == DivergenceKind::TV && options.tv_fast_path) {
    // The TV ratio is constant over admissible (p, q): both divergences
    // scale with |p - q|, so the ratio equals the row TV distance exactly.
    solution.eta = df(DivergenceKind::TV, problem.row0, problem.row1);
    solution.raw_max = solution.eta;
    solution.arg_p = 1.0;
    solution.arg_q = 0.0;
    solution.evaluations = 1;
    solution.achieved_tol = 0.0;
    solution.round_etas.push_back(solution.eta);
    return solution;
  }

  detail::RatioEvaluator ev(problem.row0.probs(), problem.row1.probs(), problem.kind);
  const DivergenceKind kind = problem.kind;
  const bool diag_scan = has_curvature(kind);
  const bool q_edges = q_edges_admissible(kind);
  const double band = options.diagonal_band;

  std::uint64_t evals = 0;
  bool exhausted = false;
  struct Best {
    double value = -1.0;
    double p = 0.0;
    double q = 0.0;
    bool diag = false;
  } best;
  auto consider = [&best](double value, double p, double q, bool diag) {
    if (value > best.value) best = {value, p, q, diag};
  };

  // Coarse scan over [h, 1-h]^2 plus admissible edges.
  const int n = std::max(4, options.coarse_grid);
  const double h = 1.0 / (2.0 * n);
  const double coarse_step = (1.0 - 2.0 * h) / static_cast<double>(n - 1);

  std::vector<double> ps = linspace(h, 1.0 - h, n);
  ps.insert(ps.begin(), 0.0);
  ps.push_back(1.0);
  std::vector<double> qs = linspace(h, 1.0 - h, n);
  if (q_edges) {
    qs.insert(qs.begin(), 0.0);
    qs.push_back(1.0);
  }

  TopK surface_top(static_cast<std::size_t>(std::max(1, options.keep_cells)));
  for (double q : qs) {
    if (exhausted) break;
    ev.set_q(q);
    for (double p : ps) {
      const double d = p - q;
      if (std::abs(d) < band) continue;
      if (evals >= options.budget) {
        exhausted = true;
        break;
      }
      ++evals;
      const double r = ev.ratio(p, d);
      if (r >= 0.0) {
        consider(r, p, q, false);
        surface_top.push(r, p, q);
      }
    }
  }

  TopK diag_top(static_cast<std::size_t>(std::max(1, options.keep_diag)));
  if (diag_scan) {
    const int dn = std::max(4, options.diag_grid);
    for (double q : linspace(1.0 / (2.0 * dn), 1.0 - 1.0 / (2.0 * dn), dn)) {
      if (evals >= options.budget) {
        exhausted = true;
        break;
      }
      ++evals;
      const double v = ev.limit_at(q);
      consider(v, q, q, true);
      diag_top.push(v, q, q);
    }
  }

  auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
  solution.round_etas.push_back(clamp01(std::max(best.value, 0.0)));

  std::vector<Candidate> surface = std::move(surface_top).sorted();
  std::vector<Candidate> diagonal = std::move(diag_top).sorted();

  const int m = std::max(3, options.zoom_grid);
  const double qlo_limit = q_edges ? 0.0 : kQMin;
  const double qhi_limit = q_edges ? 1.0 : 1.0 - kQMin;

  double half = coarse_step;
  double spacing = coarse_step;
  const int hard_cap = 24;
  int round = 0;
  while ((round < options.zoom_rounds || spacing > tol) && round < hard_cap &&
         !exhausted) {
    const std::uint64_t round_cost =
        surface.size() * static_cast<std::uint64_t>(m) * m +
        diagonal.size() * static_cast<std::uint64_t>(m);
    if (evals + round_cost > options.budget) {
      exhausted = true;
      break;
    }
    ++round;
    for (Candidate& c : surface) {
      Candidate local = c;
      const auto qwin = linspace(std::max(qlo_limit, c.q - half),
                                 std::min(qhi_limit, c.q + half), m);
      const auto pwin =
          linspace(std::max(0.0, c.p - half), std::min(1.0, c.p + half), m);
      for (double q : qwin) {
        ev.set_q(q);
        for (double p : pwin) {
          const double d = p - q;
          if (std::abs(d) < band) continue;
          ++evals;
          const double r = ev.ratio(p, d);
          if (r > local.value) local = {r, p, q};
        }
      }
      c = local;
      consider(local.value, local.p, local.q, false);
    }
    for (Candidate& c : diagonal) {
      Candidate local = c;
      for (double q : linspace(std::max(kQMin, c.q - half),
                               std::min(1.0 - kQMin, c.q + half), m)) {
        ++evals;
        const double v = ev.limit_at(q);
        if (v > local.value) local = {v, q, q};
      }
      c = local;
      consider(local.value, local.p, local.q, true);
    }
    spacing = 2.0 * half / static_cast<double>(m - 1);
    half /= options.window_shrink;
    solution.round_etas.push_back(clamp01(std::max(best.value, 0.0)));
  }

  solution.raw_max = std::max(best.value, 0.0);
  solution.eta = clamp01(solution.raw_max);
  solution.anomaly = solution.raw_max > 1.0 + 1e-9;
  solution.arg_p = best.p;
  solution.arg_q = best.q;
  solution.on_diagonal = best.diag;
  solution.evaluations = evals;
  solution.achieved_tol = spacing;
  solution.budget_exhausted = exhausted;
  return solution;
}

}  // namespace sdpi
