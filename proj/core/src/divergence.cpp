/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/divergence.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sdpi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

constexpr DivergenceTraits kTraits[] = {
    {1.0, kInf, "kl"},
    {kNan, 0.5, "tv"},
    {2.0, kInf, "chi2"},
    {0.5, 1.0, "hellinger2"},
};

void check_no_nan(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (std::isnan(x)) throw std::invalid_argument(std::string(what) + ": NaN input");
  }
}

}  // namespace

const DivergenceTraits& traits(DivergenceKind kind) noexcept {
  return kTraits[static_cast<int>(kind)];
}

bool has_curvature(DivergenceKind kind) noexcept {
  return !std::isnan(traits(kind).second_derivative_at_one);
}

bool infinite_on_support_violation(DivergenceKind kind) noexcept {
  return std::isinf(traits(kind).slope_at_infinity);
}

std::string_view to_string(DivergenceKind kind) noexcept { return traits(kind).name; }

DivergenceKind parse_divergence(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (DivergenceKind kind : kAllKinds) {
    if (lower == traits(kind).name) return kind;
  }
  throw std::invalid_argument("unknown divergence '" + std::string(text) +
                              "' (expected kl, tv, chi2 or hellinger2)");
}

namespace detail {

double df_term(DivergenceKind kind, double p, double q, double d) noexcept {
  switch (kind) {
    case DivergenceKind::KL:
      if (p <= 0.0) return 0.0;
      if (q <= 0.0) return kInf;
      return p * std::log1p(d / q);
    case DivergenceKind::TV:
      return 0.5 * std::abs(d);
    case DivergenceKind::Chi2:
      if (q <= 0.0) return p > 0.0 ? kInf : 0.0;
      return d * d / q;
    case DivergenceKind::Hellinger2: {
      const double s = std::sqrt(p) + std::sqrt(q);
      if (s <= 0.0) return 0.0;
      const double r = d / s;
      return r * r;
    }
  }
  return kNan;  // unreachable
}

double binary_divergence(DivergenceKind kind, double p, double q, double d) noexcept {
  const double t0 = df_term(kind, p, q, d);
  if (std::isinf(t0)) return kInf;
  const double t1 = df_term(kind, 1.0 - p, 1.0 - q, -d);
  if (std::isinf(t1)) return kInf;
  return std::max(0.0, t0 + t1);
}

}  // namespace detail

double df(DivergenceKind kind, std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("df: dimension mismatch");
  }
  check_no_nan(p, "df");
  check_no_nan(q, "df");
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double term = detail::df_term(kind, p[i], q[i], p[i] - q[i]);
    if (std::isinf(term)) return kInf;
    acc.add(term);
  }
  return std::max(0.0, acc.value());
}

double df(DivergenceKind kind, const Distribution& p, const Distribution& q) {
  return df(kind, p.probs(), q.probs());
}

double df_binary(DivergenceKind kind, double p, double q) {
  if (std::isnan(p) || std::isnan(q)) throw std::invalid_argument("df_binary: NaN input");
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0) {
    throw std::invalid_argument("df_binary: arguments must lie in [0, 1]");
  }
  const std::array<double, 2> pv{p, 1.0 - p};
  const std::array<double, 2> qv{q, 1.0 - q};
  return df(kind, pv, qv);
}

double mutual_information(const std::vector<std::vector<double>>& joint) {
  if (joint.empty() || joint.front().empty()) {
    throw std::invalid_argument("mutual_information: empty table");
  }
  const std::size_t rows = joint.size();
  const std::size_t cols = joint.front().size();
  double total = 0.0;
  std::vector<double> ma(rows, 0.0), mb(cols, 0.0);
  for (std::size_t a = 0; a < rows; ++a) {
    if (joint[a].size() != cols) {
      throw std::invalid_argument("mutual_information: ragged table");
    }
    for (std::size_t b = 0; b < cols; ++b) {
      const double v = joint[a][b];
      if (std::isnan(v)) throw std::invalid_argument("mutual_information: NaN input");
      if (v < 0.0) throw std::invalid_argument("mutual_information: negative entry");
      ma[a] += v;
      mb[b] += v;
      total += v;
    }
  }
  if (std::abs(total - 1.0) > kProbSumTol) {
    throw std::invalid_argument("mutual_information: entries sum to " +
                                std::to_string(total) + ", expected 1 within 1e-9");
  }
  detail::CompensatedSum acc;
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      const double v = joint[a][b];
      if (v <= 0.0) continue;
      acc.add(v * std::log(v / (ma[a] * mb[b])));
    }
  }
  return std::max(0.0, acc.value());
}

double binary_entropy(double p) {
  if (std::isnan(p)) throw std::invalid_argument("binary_entropy: NaN input");
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("binary_entropy: argument must lie in [0, 1]");
  }
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

}  // namespace sdpi
