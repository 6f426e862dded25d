#include "eft/thresholds.hpp"

#include "eft/ef_engine.hpp"
#include "eft/feq_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eft {

namespace {

constexpr double kPi = std::numbers::pi;

// Sum over the support window of kappa_n * d * Lambda(n), optionally without n = 2.
double prime_side_max(const FejerTestFunction& tf, int degree, bool skip_two) {
  double sum = 0.0;
  for (std::uint64_t n : tf.support_window().indices()) {
    if (skip_two && n == 2) continue;
    sum += prime_coefficient(tf, n) * ramanujan_c_bound(n, degree);
  }
  return sum;
}

} // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
  case Classification::Impossible: return "Impossible";
  case Classification::ForcedNegativeA2: return "ForcedNegativeA2";
  case Classification::Unconstrained: return "Unconstrained";
  }
  return "?";
}

ThresholdResult compute_thresholds(int degree, std::span<const double> mu, int rank,
                                   const FejerTestFunction& tf, const QuadratureSpec& spec) {
  if (degree < 1 || mu.size() != static_cast<std::size_t>(degree)) {
    throw std::invalid_argument("compute_thresholds: need one mu per degree");
  }
  if (rank < 0) throw std::invalid_argument("compute_thresholds: rank must be >= 0");
  tf.support_window();  // throws DegenerateSupport before any quadrature

  ThresholdResult out;
  out.rank = rank;
  out.degree = degree;
  for (double m : mu) {
    out.ell_terms.push_back(ell_term(m, tf, spec));
    out.ell_sum += out.ell_terms.back();
  }
  const double scale = kPi / tf.f_hat(0.0);
  const double base = rank * tf.f(0.0) - out.ell_sum / (2.0 * kPi);
  out.log_q0 = scale * (base - prime_side_max(tf, degree, false));
  out.log_q1 = scale * (base - prime_side_max(tf, degree, true));
  out.q0 = std::exp(out.log_q0);
  out.q1 = std::exp(out.log_q1);
  return out;
}

double a2_upper_bound(const ThresholdResult& thresholds, double q_eff,
                      const FejerTestFunction& tf) {
  if (!(q_eff > 0.0)) throw std::invalid_argument("a2_upper_bound: Q must be positive");
  // At Q1 the bound is 0 and it grows by f_hat(0)/pi per unit of log Q,
  // measured in units of c(2)-contribution per unit a(2): kappa_2 log 2.
  const double per_a2 = prime_coefficient(tf, 2) * std::numbers::ln2;
  return tf.f_hat(0.0) / kPi * (std::log(q_eff) - thresholds.log_q1) / per_a2;
}

double a2_upper_bound(int degree, std::span<const double> mu, double q_eff, int rank,
                      const FejerTestFunction& tf, const QuadratureSpec& spec) {
  return a2_upper_bound(compute_thresholds(degree, mu, rank, tf, spec), q_eff, tf);
}

PredictionOutcome classify(double q_eff, const ThresholdResult& thresholds,
                           const FejerTestFunction& tf) {
  if (!(q_eff > 0.0)) throw std::invalid_argument("classify: Q must be positive");
  PredictionOutcome out;
  out.q_eff = q_eff;
  out.thresholds = thresholds;
  const double log_q = std::log(q_eff);
  if (log_q <= thresholds.log_q0) {
    out.classification = Classification::Impossible;
    return out;
  }
  out.classification = log_q <= thresholds.log_q1 ? Classification::ForcedNegativeA2
                                                  : Classification::Unconstrained;
  out.a2_upper_bound = a2_upper_bound(thresholds, q_eff, tf);
  return out;
}

PredictionOutcome classify(double q_eff, int degree, std::span<const double> mu, int rank,
                           const FejerTestFunction& tf, const QuadratureSpec& spec) {
  return classify(q_eff, compute_thresholds(degree, mu, rank, tf, spec), tf);
}

} // namespace eft
