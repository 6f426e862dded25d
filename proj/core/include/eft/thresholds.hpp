#pragma once

// Existence threshold Q0 and forced-sign threshold Q1.
//
// With |c(n)| <= d Lambda(n) and a zero side of at least rank * f(0):
//   log Q0 = pi/f_hat(0) * [rank f(0) - 1/(2pi) sum l(mu_j) - sum_n kappa_n d Lambda(n)]
//   log Q1 = the same with the n = 2 term set to c(2) = 0
// where kappa_n = 1/pi f_hat(log n / 2 pi) / sqrt(n). Below Q0 no L-function
// with these parameters exists; between Q0 and Q1 it must have a(2) < 0.

#include "eft/special_fn.hpp"
#include "eft/test_fn.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace eft {

struct Assumptions {
  bool ramanujan = true;
  bool riemann_hypothesis = true;
};

struct ThresholdResult {
  double q0 = 0.0;
  double q1 = 0.0;
  double log_q0 = 0.0;
  double log_q1 = 0.0;
  int rank = 0;
  int degree = 0;
  std::vector<double> ell_terms;
  double ell_sum = 0.0;
  Assumptions assumptions;
};

enum class Classification {
  Impossible = 0,
  ForcedNegativeA2 = 1,
  Unconstrained = 2,
};

std::string_view to_string(Classification c) noexcept;

/// Ordering index: Impossible < ForcedNegativeA2 < Unconstrained.
constexpr int index_of(Classification c) noexcept { return static_cast<int>(c); }

struct PredictionOutcome {
  Classification classification = Classification::Unconstrained;
  std::optional<double> a2_upper_bound;  // absent when Impossible
  double q_eff = 0.0;
  ThresholdResult thresholds;
};

/// Throws DegenerateSupport, std::invalid_argument for mu.size() != degree
/// or a negative rank.
ThresholdResult compute_thresholds(int degree, std::span<const double> mu, int rank,
                                   const FejerTestFunction& tf = FejerTestFunction{},
                                   const QuadratureSpec& spec = {});

/// Largest a(2) (analytic normalisation) compatible with a non-negative zero
/// side: (G - rank f(0)) / (kappa_2 log 2). Negative means a(2) < 0 is forced.
double a2_upper_bound(int degree, std::span<const double> mu, double q_eff, int rank,
                      const FejerTestFunction& tf = FejerTestFunction{},
                      const QuadratureSpec& spec = {});

/// Same bound from precomputed thresholds (no quadrature).
double a2_upper_bound(const ThresholdResult& thresholds, double q_eff,
                      const FejerTestFunction& tf = FejerTestFunction{});

/// Impossible iff q <= q0, ForcedNegativeA2 iff q0 < q <= q1.
PredictionOutcome classify(double q_eff, const ThresholdResult& thresholds,
                           const FejerTestFunction& tf = FejerTestFunction{});

PredictionOutcome classify(double q_eff, int degree, std::span<const double> mu, int rank,
                           const FejerTestFunction& tf = FejerTestFunction{},
                           const QuadratureSpec& spec = {});

} // namespace eft
