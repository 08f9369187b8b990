/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ratio_evaluator.hpp"
#include "sdpi/parallel.hpp"

namespace sdpi {

namespace {

constexpr double kQMin = 1e-12;

std::vector<std::pair<std::size_t, std::size_t>> row_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::vector<double> linspace(double lo, double hi, int m) {
  std::vector<double> out;
  if (m <= 1 || lo >= hi) {
    out.push_back(lo);
    return out;
  }
  out.reserve(static_cast<std::size_t>(m));
  const double step = (hi - lo) / static_cast<double>(m - 1);
  for (int i = 0; i < m; ++i) out.push_back(i + 1 == m ? hi : lo + step * i);
  return out;
}

}  // namespace

ContractionResult eta_f(const Channel& channel, DivergenceKind kind, double tol) {
  EtaOptions options;
  options.tol = tol;
  return eta_f(channel, kind, options);
}

ContractionResult eta_f(const Channel& channel, DivergenceKind kind,
                        const EtaOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("eta_f: tol must be positive");

  ContractionResult result;
  result.kind = kind;

  const std::size_t n = channel.input_size();
  const bool keep_table = options.force_per_pair || n <= options.per_pair_cap;
  if (keep_table) result.per_pair_etas.emplace();

  if (n >= 2) {
    const auto pairs = row_pairs(n);
    std::vector<BinarySolution> solutions(pairs.size());
    parallel_for(pairs.size(), options.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const BinaryProblem problem{channel.row(pairs[k].first),
                                    channel.row(pairs[k].second), kind};
        solutions[k] = solve_binary(problem, options.tol, options.solver);
      }
    });
    // Sequential reduction in pair order; strict improvement keeps the
    // lexicographically smallest argmax independent of the thread count.
    std::size_t best = 0;
    for (std::size_t k = 1; k < solutions.size(); ++k) {
      if (solutions[k].eta > solutions[best].eta) best = k;
    }
    result.eta = solutions[best].eta;
    result.best_pair = pairs[best];
    result.arg = solutions[best];
    for (std::size_t k = 0; k < solutions.size(); ++k) {
      result.any_budget_exhausted |= solutions[k].budget_exhausted;
      result.any_anomaly |= solutions[k].anomaly;
      if (keep_table) {
        result.per_pair_etas->push_back(
            {pairs[k].first, pairs[k].second, solutions[k].eta});
      }
    }
  }
  // n == 1: no two-letter input pair exists; the supremum over the empty
  // set is reported as 0.

  if (kind == DivergenceKind::KL) result.bounds = sandwich_bounds(channel);
  return result;
}

double hellinger_diameter(const Channel& channel) {
  double diameter = 0.0;
  const std::size_t n = channel.input_size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      diameter = std::max(
          diameter, df(DivergenceKind::Hellinger2, channel.row(i), channel.row(j)));
    }
  }
  return diameter;
}

SandwichBounds sandwich_bounds(const Channel& channel) {
  const double d = hellinger_diameter(channel);
  const double t = 0.5 * d;
  return {t, t * (2.0 - t), d};
}

double EnvelopeCurve::value_at(double d_in) const {
  if (vertices.empty()) return 0.0;
  if (d_in <= vertices.front().first) return vertices.front().second;
  if (d_in >= vertices.back().first) return vertices.back().second;
  const auto it = std::upper_bound(
      vertices.begin(), vertices.end(), d_in,
      [](double v, const std::pair<double, double>& pt) { return v < pt.first; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double t = (d_in - a.first) / (b.first - a.first);
  return a.second + t * (b.second - a.second);
}

double EnvelopeCurve::max_chord_slope() const {
  double slope = 0.0;
  for (const auto& [x, y] : vertices) {
    if (x > 0.0) slope = std::max(slope, y / x);
  }
  return slope;
}

EnvelopeCurve trace_envelope(const Channel& channel, DivergenceKind kind,
                             double window_max, const EnvelopeGrid& grid) {
  if (!(window_max > 0.0)) {
    throw std::invalid_argument("trace_envelope: window_max must be positive");
  }
  const bool q_edges = !infinite_on_support_violation(kind);

  std::vector<std::pair<double, double>> cloud;
  cloud.emplace_back(0.0, 0.0);

  const std::size_t n = channel.input_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      detail::RatioEvaluator ev(channel.row(i).probs(), channel.row(j).probs(), kind);

      auto add_point = [&](double p, double q) {
        const double d = p - q;
        if (std::abs(d) < 1e-14) return;
        const double d_in = detail::binary_divergence(kind, p, q, d);
        if (!(d_in > 1e-15) || std::isinf(d_in) || d_in > window_max) return;
        ev.set_q(q);
        cloud.emplace_back(d_in, ev.numerator(p, d));
      };

      // Base grid.
      const int qg = std::max(4, grid.q_grid);
      std::vector<double> qs = linspace(1.0 / (2.0 * qg), 1.0 - 1.0 / (2.0 * qg), qg);
      if (q_edges) {
        qs.insert(qs.begin(), 0.0);
        qs.push_back(1.0);
      }
      const std::vector<double> ps = linspace(0.0, 1.0, std::max(4, grid.p_grid));
      for (double q : qs) {
        for (double p : ps) add_point(p, q);
      }

      // Near-diagonal band; these points carry the slope at the origin.
      const int ng = std::max(4, grid.near_diag_grid);
      for (double q : linspace(1.0 / (2.0 * ng), 1.0 - 1.0 / (2.0 * ng), ng)) {
        for (double o : grid.near_diag_offsets) {
          add_point(std::min(1.0, q + o), q);
          add_point(std::max(0.0, q - o), q);
        }
      }

      // Edge sweep toward the window boundary. Along the p edges the input
      // divergence grows monotonically as q approaches the opposite edge, so
      // the sampled d_in range is anchored at min(window_max, sup d_in).
      for (double pe : {0.0, 1.0}) {
        const double qt = 1.0 - pe;
        auto d_in_at = [&](double q) {
          return detail::binary_divergence(kind, pe, q, pe - q);
        };
        auto q_at_edge_distance = [&](double t) {
          return qt == 0.0 ? t : 1.0 - t;
        };
        const double t_ext = q_edges ? 0.0 : kQMin;
        const double q_ext = q_at_edge_distance(t_ext);
        const double d_ext = d_in_at(q_ext);
        for (int k = 0; k < std::max(1, grid.edge_grid); ++k) {
          add_point(pe, q_at_edge_distance(0.5 * std::pow(0.5, k)));
        }
        if (!std::isinf(d_ext) && d_ext <= window_max) {
          add_point(pe, q_ext);
        } else {
          // Bisect the edge distance so the curve reaches window_max itself.
          // d_in decreases as t grows toward the p edge (q -> pe).
          double t_lo = 0.5;
          int guard = 0;
          while (d_in_at(q_at_edge_distance(t_lo)) > window_max && ++guard < 80) {
            t_lo = 0.5 * (1.0 + t_lo);
          }
          double t_hi = t_ext;  // outside: d_in beyond the window
          if (d_in_at(q_at_edge_distance(t_lo)) <= window_max) {
            for (int it = 0; it < 100; ++it) {
              const double mid = 0.5 * (t_lo + t_hi);
              if (d_in_at(q_at_edge_distance(mid)) <= window_max) {
                t_lo = mid;
              } else {
                t_hi = mid;
              }
            }
            add_point(pe, q_at_edge_distance(t_lo));
          }
        }
      }
    }
  }

  if (cloud.size() <= 1) {
    throw std::domain_error("trace_envelope: no sampled point lies inside the window");
  }

  std::sort(cloud.begin(), cloud.end());
  // Equal d_in values keep the largest d_out.
  std::vector<std::pair<double, double>> points;
  points.reserve(cloud.size());
  for (const auto& pt : cloud) {
    if (!points.empty() && points.back().first == pt.first) {
      points.back().second = std::max(points.back().second, pt.second);
    } else {
      points.push_back(pt);
    }
  }

  // Monotone upper hull; cross >= 0 drops points on or below the chord.
  std::vector<std::pair<double, double>> hull;
  auto cross = [](const std::pair<double, double>& a, const std::pair<double, double>& b,
                  const std::pair<double, double>& c) {
    return (b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * (c.first - a.first);
  };
  for (const auto& pt : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  if (hull.front() != std::pair<double, double>(0.0, 0.0)) {
    throw std::logic_error("trace_envelope: hull does not start at the origin");
  }
  for (const auto& [x, y] : hull) {
    if (y > x + 1e-9) {
      throw std::logic_error("trace_envelope: hull vertex above the identity line");
    }
  }

  EnvelopeCurve curve;
  curve.vertices = std::move(hull);
  curve.kind = kind;
  curve.window_max = window_max;
  return curve;
}

}  // namespace sdpi
