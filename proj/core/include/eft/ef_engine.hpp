#pragma once

// Terms of the explicit formula
//
//   sum_gamma f(gamma) = f_hat(0)/pi log Q + 1/(2 pi) sum_j l(mu_j, f)
//                        + 1/pi sum_n c(n)/sqrt(n) f_hat(log n / 2 pi)
//
//   l(mu, f) = integral Re psi(1/4 + mu + i t/2) f(t) dt - f_hat(0) log pi
//
// The Q entering the log term is the "pi-absorbed" scale: for
// Lambda(s) = Q_an^s prod Gamma(s/2 + mu_j) L(s) it is Q_an * pi^(d/2).
// Callers map arithmetic data to that scale (see applications.hpp).

#include "eft/feq_model.hpp"
#include "eft/special_fn.hpp"
#include "eft/test_fn.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

namespace eft {

struct ExplicitFormulaBreakdown {
  double logq_term = 0.0;
  std::vector<double> ell_terms;               // one l(mu_j, f) per j
  std::map<std::uint64_t, double> prime_terms; // n -> 1/pi c(n)/sqrt(n) f_hat(log n/2pi)
  double rhs_total = 0.0;
  double zero_lower_bound = 0.0;               // rank * f(0)

  double recompute_total() const;
};

/// Non-negative zero ordinates (rho = 1/2 + i gamma), sorted ascending.
/// Zeros at gamma = 0 are listed explicitly, once per multiplicity.
class ZeroList {
public:
  ZeroList() = default;

  /// Throws std::invalid_argument for negative or unsorted input.
  explicit ZeroList(std::vector<double> ordinates,
                    double complete_to = std::numeric_limits<double>::infinity());

  static ZeroList from_positive(std::span<const double> positive, int central_multiplicity,
                                double complete_to = std::numeric_limits<double>::infinity());

  std::span<const double> ordinates() const noexcept { return ordinates_; }
  int central_multiplicity() const noexcept { return central_; }
  double complete_to() const noexcept { return complete_to_; }

private:
  std::vector<double> ordinates_;
  int central_ = 0;
  double complete_to_ = std::numeric_limits<double>::infinity();
};

/// Read-mostly memo for l(mu, f) keyed by (mu, delta, tolerance).
class EllTermCache {
public:
  double get_or_compute(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec);

  /// Number of l-terms actually computed (cache misses).
  std::size_t evaluations() const noexcept { return evaluations_.load(); }
  std::size_t size() const;
  void clear();

private:
  using Key = std::tuple<double, double, double>;
  mutable std::shared_mutex mutex_;
  std::map<Key, double> values_;
  std::atomic<std::size_t> evaluations_{0};
};

EllTermCache& default_ell_cache();

/// l(mu, f) through integrate_even_decaying, no caching.
double compute_ell_term(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec = {});

/// l(mu, f) memoised in `cache` (the process-wide cache by default).
double ell_term(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec = {});
double ell_term(double mu, const FejerTestFunction& tf, const QuadratureSpec& spec,
                EllTermCache& cache);

/// Independent route to l(mu, f): Romberg on every period of the kernel up to
/// a multiple of its period, plus the asymptotic tail in closed form.
double ell_term_romberg(double mu, const FejerTestFunction& tf, double tolerance = 1e-11);

/// 1/pi * f_hat(log n / 2 pi) / sqrt(n).
double prime_coefficient(const FejerTestFunction& tf, std::uint64_t n);

/// Largest right-hand side allowed by |c(n)| <= d Lambda(n). `feq.q_scale()`
/// is taken as the pi-absorbed scale. Throws DegenerateSupport.
ExplicitFormulaBreakdown rhs_max(const FunctionalEquationParams& feq,
                                 const FejerTestFunction& tf, int rank,
                                 const QuadratureSpec& spec = {});

/// Right-hand side for concrete coefficients. `mu` may be empty.
ExplicitFormulaBreakdown rhs_actual(double q_eff, std::span<const double> mu,
                                    const CoefficientData& coeffs, const FejerTestFunction& tf,
                                    const QuadratureSpec& spec = {});

/// Bound on the zero sum beyond height T (both signs of gamma), from the
/// smoothed zero density and the envelope f(x) <= 1 / (pi^2 delta x^2).
double zero_tail_bound(double q_eff, int degree, const FejerTestFunction& tf, double height);

struct ResidualReport {
  double lhs_truncated = 0.0;
  double rhs = 0.0;
  double tail_bound = 0.0;
  double quadrature_budget = 0.0;
  double height = 0.0;
  std::size_t zeros_used = 0;

  double residual() const noexcept { return lhs_truncated - rhs; }
  bool within_budget() const noexcept;
};

/// Both sides of the explicit formula for one L-function, zeros truncated at
/// `height`. Throws IncompleteData when zeros or coefficients do not cover
/// what the formula needs.
ResidualReport explicit_formula_residual(const FunctionalEquationParams& feq,
                                         const CoefficientData& coeffs, const ZeroList& zeros,
                                         const FejerTestFunction& tf, double height,
                                         const QuadratureSpec& spec = {});

ResidualReport explicit_formula_residual(double q_eff, std::span<const double> mu,
                                         const CoefficientData& coeffs, const ZeroList& zeros,
                                         const FejerTestFunction& tf, double height,
                                         const QuadratureSpec& spec = {});

} // namespace eft
