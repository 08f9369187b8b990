/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sdpi/parallel.hpp"
#include "sdpi/random.hpp"

namespace sdpi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxAttempts = 1000;

struct PairSample {
  std::vector<double> p;
  std::vector<double> q;
  double d_in = -1.0;  ///< negative when no admissible draw was found
  std::uint64_t rejected = 0;
};

/// Draws one admissible (P, Q) pair for sample index `index`; resamples while
/// the input divergence is infinite or below the floor. Deterministic in
/// (seed, index) alone.
PairSample draw_pair(std::size_t n, DivergenceKind kind, std::uint64_t seed,
                     std::uint64_t index, double min_divergence) {
  PairSample out;
  out.p.resize(n);
  out.q.resize(n);
  Rng rng(seed, index);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.fill_simplex(out.p);
    rng.fill_simplex(out.q);
    const double d = df(kind, out.p, out.q);
    if (std::isfinite(d) && d >= min_divergence) {
      out.d_in = d;
      return out;
    }
    ++out.rejected;
  }
  out.d_in = -1.0;
  return out;
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

double sample_ratio(const Channel& channel, DivergenceKind kind,
                    const Distribution& p, const Distribution& q) {
  if (!validate_pair(p, q, channel, kind)) {
    throw std::invalid_argument("sample_ratio: inadmissible pair");
  }
  const double den = df(kind, p, q);
  const auto out_p = channel.push_forward(p.probs());
  const auto out_q = channel.push_forward(q.probs());
  return df(kind, out_p, out_q) / den;
}

OracleReport verify_reduction(const Channel& channel, DivergenceKind kind,
                              std::uint64_t samples, std::uint64_t seed,
                              double slack) {
  VerifyOptions options;
  options.slack = slack;
  return verify_reduction(channel, kind, samples, seed, options);
}

OracleReport verify_reduction(const Channel& channel, DivergenceKind kind,
                              std::uint64_t samples, std::uint64_t seed,
                              const VerifyOptions& options) {
  const double reference = options.reference_eta
                               ? *options.reference_eta
                               : [&] {
                                   EtaOptions eo;
                                   eo.tol = options.tol;
                                   eo.threads = options.threads;
                                   return eta_f(channel, kind, eo).eta;
                                 }();

  const std::size_t n = channel.input_size();
  std::vector<double> ratios(samples, -1.0);
  std::vector<std::uint32_t> rejects(samples, 0);

  parallel_for(samples, options.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      PairSample s = draw_pair(n, kind, seed, k, options.min_divergence);
      rejects[k] = static_cast<std::uint32_t>(s.rejected);
      if (s.d_in < 0.0) continue;
      const auto out_p = channel.push_forward(s.p);
      const auto out_q = channel.push_forward(s.q);
      ratios[k] = df(kind, out_p, out_q) / s.d_in;
    }
  });

  OracleReport report;
  report.samples = samples;
  report.reference_eta = reference;
  report.slack = options.slack;
  report.seed = seed;
  std::size_t arg = samples;  // sentinel: no admissible sample
  for (std::size_t k = 0; k < samples; ++k) {
    report.rejected += rejects[k];
    if (ratios[k] < 0.0) continue;
    ++report.used;
    if (ratios[k] > reference + options.slack) ++report.violations;
    if (arg == samples || ratios[k] > report.max_ratio_found) {
      report.max_ratio_found = ratios[k];
      arg = k;
    }
  }
  if (arg < samples) {
    PairSample s = draw_pair(n, kind, seed, arg, options.min_divergence);
    report.achieving_pair = {std::move(s.p), std::move(s.q)};
  }
  return report;
}

double lagrangian_gap(const Channel& channel, DivergenceKind kind,
                      const Distribution& p, const Distribution& q, double lambda) {
  if (p.size() != channel.input_size() || q.size() != channel.input_size()) {
    throw std::invalid_argument("lagrangian_gap: dimension mismatch");
  }
  const double d_in = df(kind, p, q);
  if (std::isinf(d_in)) {
    throw std::domain_error("lagrangian_gap: infinite input divergence");
  }
  const auto out_p = channel.push_forward(p.probs());
  const auto out_q = channel.push_forward(q.probs());
  return df(kind, out_p, out_q) - lambda * d_in;
}

DominationResult binary_dominates(const Channel& channel, DivergenceKind kind,
                                  const Distribution& p, const Distribution& q,
                                  double lambda, double tol) {
  if (std::isnan(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("binary_dominates: lambda must lie in [0, 1]");
  }
  const double d_in = df(kind, p, q);
  if (!(d_in > 0.0) || std::isinf(d_in)) {
    throw std::domain_error("binary_dominates: df(P, Q) must be finite and positive");
  }
  const double target = lagrangian_gap(channel, kind, p, q, lambda);
  const std::size_t n = channel.input_size();
  const std::size_t m = channel.output_size();

  DominationResult result;
  result.target_gap = target;
  result.gap = -kInf;

  std::vector<double> out_p(m), out_q(m);
  auto gap_of = [&](std::size_t i, std::size_t j, double pi, double qi) -> double {
    const double pj = 1.0 - pi;
    const double qj = 1.0 - qi;
    const std::array<double, 2> bp{pi, pj};
    const std::array<double, 2> bq{qi, qj};
    const double din2 = df(kind, bp, bq);
    if (std::isinf(din2)) return -kInf;
    const auto& ri = channel.row(i).probs();
    const auto& rj = channel.row(j).probs();
    for (std::size_t y = 0; y < m; ++y) {
      out_p[y] = pi * ri[y] + pj * rj[y];
      out_q[y] = qi * ri[y] + qj * rj[y];
    }
    return df(kind, out_p, out_q) - lambda * din2;
  };
  auto consider = [&](std::size_t i, std::size_t j, double pi, double qi) {
    const double g = gap_of(i, j, pi, qi);
    if (g > result.gap) result = {false, {i, j}, pi, qi, g, target};
  };

  // Constrained candidates: Q-hat on two atoms of supp(Q) with the coupling
  // P-hat = (P/Q) Q-hat. The hyperplane sum_x (P(x)/Q(x)) Q-hat(x) = 1 pins
  // the exact extreme-point weight; the surrounding grid searches the
  // renormalized coupling as well.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i] > 0.0) support.push_back(i);
  }
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      const std::size_t i = support[a];
      const std::size_t j = support[b];
      const double ri = p[i] / q[i];
      const double rj = p[j] / q[j];

      if (std::abs(ri - rj) > 1e-15) {
        const double w = (1.0 - rj) / (ri - rj);
        if (w >= 0.0 && w <= 1.0) {
          const double mass = ri * w + rj * (1.0 - w);  // 1 up to rounding
          if (mass > 0.0) consider(i, j, ri * w / mass, w);
        }
      }

      double best_w = 0.0;
      double best_local = -kInf;
      auto coupled = [&](double w) {
        const double mass = ri * w + rj * (1.0 - w);
        if (mass <= 0.0) return;
        const double pi = ri * w / mass;
        const double g = gap_of(i, j, pi, w);
        if (g > best_local) {
          best_local = g;
          best_w = w;
        }
        if (g > result.gap) result = {false, {i, j}, pi, w, g, target};
      };
      for (double w : linspace(0.0, 1.0, 1024)) coupled(w);
      double half = 1.0 / 1023.0;
      for (int round = 0; round < 3 && best_local > -kInf; ++round) {
        for (double w : linspace(std::max(0.0, best_w - half),
                                 std::min(1.0, best_w + half), 64)) {
          coupled(w);
        }
        half /= 8.0;
      }
    }
  }

  // Unconstrained candidates when P places mass outside supp(Q); only the
  // divergences with finite slope at infinity admit such pairs.
  bool outside = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] > 0.0 && q[i] == 0.0) outside = true;
  }
  if (outside && !infinite_on_support_violation(kind)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double best_pi = 0.0, best_qi = 0.0, best_local = -kInf;
        for (double qi : linspace(0.0, 1.0, 64)) {
          for (double pi : linspace(0.0, 1.0, 64)) {
            const double g = gap_of(i, j, pi, qi);
            if (g > best_local) {
              best_local = g;
              best_pi = pi;
              best_qi = qi;
            }
            if (g > result.gap) result = {false, {i, j}, pi, qi, g, target};
          }
        }
        double half = 1.0 / 63.0;
        for (int round = 0; round < 3 && best_local > -kInf; ++round) {
          for (double qi : linspace(std::max(0.0, best_qi - half),
                                    std::min(1.0, best_qi + half), 32)) {
            for (double pi : linspace(std::max(0.0, best_pi - half),
                                      std::min(1.0, best_pi + half), 32)) {
              const double g = gap_of(i, j, pi, qi);
              if (g > best_local) {
                best_local = g;
                best_pi = pi;
                best_qi = qi;
              }
              if (g > result.gap) result = {false, {i, j}, pi, qi, g, target};
            }
          }
          half /= 8.0;
        }
      }
    }
  }

  result.found = result.gap >= target - tol;
  return result;
}

OracleReport envelope_dominates(const Channel& channel, DivergenceKind kind,
                                const EnvelopeCurve& curve, std::uint64_t samples,
                                std::uint64_t seed, double slack) {
  VerifyOptions options;
  options.slack = slack;
  return envelope_dominates(channel, kind, curve, samples, seed, options);
}

OracleReport envelope_dominates(const Channel& channel, DivergenceKind kind,
                                const EnvelopeCurve& curve, std::uint64_t samples,
                                std::uint64_t seed, const VerifyOptions& options) {
  if (curve.vertices.empty()) {
    throw std::invalid_argument("envelope_dominates: empty curve");
  }
  const std::size_t n = channel.input_size();
  const double window = std::min(curve.window_max, curve.vertices.back().first);

  std::vector<double> d_ins(samples, -1.0);
  std::vector<double> d_outs(samples, 0.0);
  std::vector<std::uint32_t> rejects(samples, 0);

  parallel_for(samples, options.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      PairSample s = draw_pair(n, kind, seed, k, options.min_divergence);
      rejects[k] = static_cast<std::uint32_t>(s.rejected);
      if (s.d_in < 0.0 || s.d_in > window) continue;  // outside the window
      const auto out_p = channel.push_forward(s.p);
      const auto out_q = channel.push_forward(s.q);
      d_ins[k] = s.d_in;
      d_outs[k] = df(kind, out_p, out_q);
    }
  });

  OracleReport report;
  report.samples = samples;
  report.reference_eta = curve.max_chord_slope();
  report.slack = options.slack;
  report.seed = seed;
  std::size_t arg = samples;
  double worst_excess = -kInf;
  for (std::size_t k = 0; k < samples; ++k) {
    report.rejected += rejects[k];
    if (d_ins[k] < 0.0) continue;
    ++report.used;
    report.max_ratio_found = std::max(report.max_ratio_found, d_outs[k] / d_ins[k]);
    const double excess = d_outs[k] - curve.value_at(d_ins[k]);
    if (excess > options.slack) ++report.violations;
    if (excess > worst_excess) {
      worst_excess = excess;
      arg = k;
    }
  }
  if (arg < samples) {
    PairSample s = draw_pair(n, kind, seed, arg, options.min_divergence);
    report.achieving_pair = {std::move(s.p), std::move(s.q)};
  }
  return report;
}

}  // namespace sdpi
