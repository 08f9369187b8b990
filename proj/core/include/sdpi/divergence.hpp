/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdpi/distribution.hpp"

namespace sdpi {

/// The divergence families supported by the library. All are f-divergences
/// D_f(P||Q) = sum_x Q(x) f(P(x)/Q(x)) with the generators
///   KL         f(t) = t ln t            (natural log, results in nats)
///   TV         f(t) = |t - 1| / 2
///   Chi2       f(t) = (t - 1)^2
///   Hellinger2 f(t) = (1 - sqrt(t))^2
enum class DivergenceKind { KL, TV, Chi2, Hellinger2 };

inline constexpr DivergenceKind kAllKinds[] = {
    DivergenceKind::KL, DivergenceKind::TV, DivergenceKind::Chi2,
    DivergenceKind::Hellinger2};

/// Generator metadata used by the solvers.
struct DivergenceTraits {
  /// f''(1); NaN when undefined (TV). Strictly positive when defined.
  double second_derivative_at_one;
  /// lim_{t->inf} f(t)/t; +infinity for KL and Chi2.
  double slope_at_infinity;
  /// Canonical lowercase name.
  const char* name;
};

const DivergenceTraits& traits(DivergenceKind kind) noexcept;

/// True when f''(1) is defined and finite (everything except TV).
bool has_curvature(DivergenceKind kind) noexcept;

/// True when mass of P outside supp(Q) makes D_f infinite (KL, Chi2).
bool infinite_on_support_violation(DivergenceKind kind) noexcept;

std::string_view to_string(DivergenceKind kind) noexcept;

/// Parses a case-insensitive divergence name: kl, tv, chi2, hellinger2.
/// Throws std::invalid_argument on anything else.
DivergenceKind parse_divergence(std::string_view text);

/// D_f(P||Q). Conventions: terms with P(x)=Q(x)=0 contribute 0; terms with
/// Q(x)=0 < P(x) contribute P(x) * slope_at_infinity (so +infinity for KL
/// and Chi2). Throws on length mismatch or NaN input.
double df(DivergenceKind kind, std::span<const double> p, std::span<const double> q);
double df(DivergenceKind kind, const Distribution& p, const Distribution& q);

/// D_f(Ber(p)||Ber(q)) on a two-letter alphabet; same code path as df.
/// Throws on NaN or arguments outside [0, 1].
double df_binary(DivergenceKind kind, double p, double q);

/// Mutual information in nats of a joint probability table (rows index the
/// first variable). Entries must be nonnegative and sum to 1 within
/// kProbSumTol. Throws on NaN, a negative entry, or a ragged table.
double mutual_information(const std::vector<std::vector<double>>& joint);

/// Binary entropy in nats; h(0) = h(1) = 0. Throws on NaN or p outside [0, 1].
double binary_entropy(double p);

namespace detail {

/// Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const noexcept { return sum + comp; }
};

/// One term of D_f(P||Q) with the difference d = p - q supplied by the
/// caller. Passing the difference analytically keeps near-diagonal
/// evaluations stable: every generator below consumes (p, q, d) in a form
/// free of catastrophic cancellation.
double df_term(DivergenceKind kind, double p, double q, double d) noexcept;

/// D_f(Ber(p)||Ber(q)) with d = p - q supplied analytically.
double binary_divergence(DivergenceKind kind, double p, double q, double d) noexcept;

}  // namespace detail

}  // namespace sdpi
