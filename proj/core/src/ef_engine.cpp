#include "eft/ef_engine.hpp"

#include "eft/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eft {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ExplicitFormulaBreakdown::recompute_total() const {
  double ell = 0.0;
  for (double v : ell_terms) ell += v;
  double primes = 0.0;
  for (const auto& [n, v] : prime_terms) primes += v;
  return logq_term + ell / (2.0 * kPi) + primes;
}

// ---------------------------------------------------------------------------

ZeroList::ZeroList(std::vector<double> ordinates, double complete_to)
    : ordinates_(std::move(ordinates)), complete_to_(complete_to) {
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] >= 0.0)) {
      throw std::invalid_argument("zero ordinates must be non-negative");
    }
    if (i > 0 && ordinates_[i] < ordinates_[i - 1]) {
      throw std::invalid_argument("zero ordinates must be sorted");
    }
  }
  central_ = static_cast<int>(std::count(ordinates_.begin(), ordinates_.end(), 0.0));
}

ZeroList ZeroList::from_positive(std::span<const double> positive, int central_multiplicity,
                                 double complete_to) {
  if (central_multiplicity < 0) {
    throw std::invalid_argument("central multiplicity must be >= 0");
  }
  std::vector<double> all(static_cast<std::size_t>(central_multiplicity), 0.0);
  all.insert(all.end(), positive.begin(), positive.end());
  return ZeroList(std::move(all), complete_to);
}

// ---------------------------------------------------------------------------

double compute_ell_term(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec) {
  if (!(mu >= 0.0)) throw std::invalid_argument("ell_term: mu must be >= 0");
  const double shift = 0.25 + mu;
  auto integrand = [&tf, shift](double t) {
    return digamma_re({shift, 0.5 * t}) * tf.f(t);
  };
  return integrate_even_decaying(integrand, spec) - tf.f_hat(0.0) * std::log(kPi);
}

double EllTermCache::get_or_compute(double mu, const FejerTestFunction& tf,
                                    const QuadratureSpec& spec) {
  const Key key{mu, tf.delta(), spec.tolerance};
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  const double value = compute_ell_term(mu, tf, spec);
  evaluations_.fetch_add(1);
  std::unique_lock lock(mutex_);
  return values_.try_emplace(key, value).first->second;
}

std::size_t EllTermCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void EllTermCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
  evaluations_.store(0);
}

EllTermCache& default_ell_cache() {
  static EllTermCache cache;
  return cache;
}

double ell_term(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec) {
  return default_ell_cache().get_or_compute(mu, tf, spec);
}

double ell_term(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec,
                EllTermCache& cache) {
  return cache.get_or_compute(mu, tf, spec);
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
double romberg(const F& g, double a, double b, double tolerance) {
  constexpr int kMaxLevels = 14;
  double row[kMaxLevels + 1];
  double h = b - a;
  row[0] = 0.5 * h * (g(a) + g(b));
  for (int k = 1; k <= kMaxLevels; ++k) {
    h *= 0.5;
    double sum = 0.0;
    const long points = 1L << (k - 1);
    for (long i = 0; i < points; ++i) sum += g(a + (2 * i + 1) * h);
    double prev = row[0];
    row[0] = 0.5 * row[0] + h * sum;
    double factor = 1.0;
    for (int j = 1; j <= k; ++j) {
      factor *= 4.0;
      const double older = j < k ? row[j] : 0.0;
      const double next = row[j - 1] + (row[j - 1] - prev) / (factor - 1.0);
      prev = older;
      row[j] = next;
    }
    if (k >= 4 && std::abs(row[k] - row[k - 1]) <= tolerance) return row[k];
  }
  return row[kMaxLevels];
}

} // namespace

double ell_term_romberg(double mu, const FejerTestFunction& tf, double tolerance) {
  if (!(mu >= 0.0)) throw std::invalid_argument("ell_term_romberg: mu must be >= 0");
  const double shift = 0.25 + mu;
  const double delta = tf.delta();
  const double period = 1.0 / delta;
  const double reach = std::max(4000.0, 400.0 * shift);
  const auto periods = static_cast<long>(std::ceil(reach / period));
  const double height = periods * period;

  auto integrand = [&tf, shift](double t) {
    return digamma_re({shift, 0.5 * t}) * tf.f(t);
  };
  const double per_panel = std::max(tolerance / static_cast<double>(periods), 1e-15);
  double body = 0.0;
  for (long k = 0; k < periods; ++k) {
    body += romberg(integrand, k * period, (k + 1) * period, per_panel);
  }

  // Beyond T = periods/delta:
  //   f(t) = (1 - cos(w t)) / (2 pi^2 delta t^2),  w = 2 pi delta, cos(w T) = 1
  //   Re psi(shift + i t/2) = log(t/2) + c2 / t^2 + O(t^-4)
  // The non-oscillating part integrates exactly; the oscillating part leaves
  // -phi'(T)/w^2 with phi = log(t/2)/t^2.
  const double weight = 1.0 / (2.0 * kPi * kPi * delta);
  const double omega = 2.0 * kPi * delta;
  const double c2 = 2.0 * shift * shift - 2.0 * shift + 1.0 / 3.0;
  const double log_half = std::log(0.5 * height);
  const double smooth = (log_half + 1.0) / height + c2 / (3.0 * height * height * height);
  const double phi_prime = (1.0 - 2.0 * log_half) / (height * height * height);
  const double tail = weight * (smooth + phi_prime / (omega * omega));

  return 2.0 * (body + tail) - tf.f_hat(0.0) * std::log(kPi);
}

// ---------------------------------------------------------------------------

double prime_coefficient(const FejerTestFunction& tf, std::uint64_t n) {
  return tf.f_hat_at_log(n) / (kPi * std::sqrt(static_cast<double>(n)));
}

ExplicitFormulaBreakdown rhs_max(const FunctionalEquationParams& feq,
                                 const FejerTestFunction& tf, int rank,
                                 const QuadratureSpec& spec) {
  if (rank < 0) throw std::invalid_argument("rank must be >= 0");
  const SupportWindow window = tf.support_window();
  ExplicitFormulaBreakdown out;
  out.logq_term = tf.f_hat(0.0) / kPi * std::log(feq.q_scale());
  for (double mu : feq.mu()) out.ell_terms.push_back(ell_term(mu, tf, spec));
  for (std::uint64_t n : window.indices()) {
    if (von_mangoldt(n) == 0.0) continue;
    out.prime_terms[n] = prime_coefficient(tf, n) * ramanujan_c_bound(n, feq.degree());
  }
  out.zero_lower_bound = rank * tf.f(0.0);
  out.rhs_total = out.recompute_total();
  return out;
}

ExplicitFormulaBreakdown rhs_actual(double q_eff, std::span<const double> mu,
                                    const CoefficientData& coeffs, const FejerTestFunction& tf,
                                    const QuadratureSpec& spec) {
  if (!(q_eff > 0.0)) throw std::invalid_argument("Q must be positive");
  const SupportWindow window = tf.support_window();
  if (!coeffs.contains(window.n_max)) {
    throw IncompleteData("coefficients stop at n = " + std::to_string(coeffs.max_index()) +
                         " but the support window reaches n = " + std::to_string(window.n_max));
  }
  ExplicitFormulaBreakdown out;
  out.logq_term = tf.f_hat(0.0) / kPi * std::log(q_eff);
  for (double m : mu) out.ell_terms.push_back(ell_term(m, tf, spec));
  for (std::uint64_t n : window.indices()) {
    const double c = coeffs.c(n);
    if (c == 0.0) continue;
    out.prime_terms[n] = prime_coefficient(tf, n) * c;
  }
  out.rhs_total = out.recompute_total();
  return out;
}

double zero_tail_bound(double q_eff, int degree, const FejerTestFunction& tf, double height) {
  if (!(height > 0.0)) throw std::invalid_argument("height must be positive");
  const double log_q2 = 2.0 * std::log(q_eff);
  // positive zeros have density (2 log Q + d log(t / 2 pi)) / (2 pi)
  const double smooth =
      std::max(0.0, log_q2 + degree * (std::log(height / (2.0 * kPi)) + 1.0)) /
      (kPi * kPi * kPi * tf.delta() * height);
  // counting-function fluctuation of size d log T + |2 log Q| + 1
  const double wobble = 4.0 * tf.envelope(height) *
                        (degree * std::log(std::max(height, 1.0)) + std::abs(log_q2) + 1.0);
  return smooth + wobble;
}

bool ResidualReport::within_budget() const noexcept {
  return std::abs(residual()) <= tail_bound + quadrature_budget;
}

ResidualReport explicit_formula_residual(double q_eff, std::span<const double> mu,
                                         const CoefficientData& coeffs, const ZeroList& zeros,
                                         const FejerTestFunction& tf, double height,
                                         const QuadratureSpec& spec) {
  if (height > zeros.complete_to()) {
    throw IncompleteData("zeros are only complete to height " +
                         std::to_string(zeros.complete_to()));
  }
  ResidualReport out;
  out.height = height;
  out.lhs_truncated = zeros.central_multiplicity() * tf.f(0.0);
  for (double g : zeros.ordinates()) {
    if (g == 0.0) continue;
    if (g > height) break;
    out.lhs_truncated += 2.0 * tf.f(g);
    ++out.zeros_used;
  }
  out.zeros_used += static_cast<std::size_t>(zeros.central_multiplicity());
  out.rhs = rhs_actual(q_eff, mu, coeffs, tf, spec).rhs_total;
  out.tail_bound = zero_tail_bound(q_eff, static_cast<int>(mu.size()), tf, height);
  out.quadrature_budget = static_cast<double>(mu.size()) * spec.tolerance / (2.0 * kPi);
  return out;
}

ResidualReport explicit_formula_residual(const FunctionalEquationParams& feq,
                                         const CoefficientData& coeffs, const ZeroList& zeros,
                                         const FejerTestFunction& tf, double height,
                                         const QuadratureSpec& spec) {
  return explicit_formula_residual(feq.q_scale(), feq.mu(), coeffs, zeros, tf, height, spec);
}

} // namespace eft
