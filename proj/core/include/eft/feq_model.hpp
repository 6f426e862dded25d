#pragma once

// Functional-equation data and Dirichlet / log-derivative coefficients.
//
// An L-function here is described by
//   Lambda(s) = Q^s prod_j Gamma(s/2 + mu_j) L(s) = eps * Lambda(1 - s)
// with L(s) = sum a(n) n^-s normalised so that |a(p)| <= d at primes, and
// L'/L(s) = sum c(n) n^-s.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace eft {

class FunctionalEquationParams {
public:
  /// Throws std::invalid_argument unless d >= 1, mu.size() == d, every
  /// mu_j >= 0, Q > 0 and sign is +1 or -1.
  FunctionalEquationParams(std::vector<double> mu, double q_scale, int sign = 1);

  int degree() const noexcept { return static_cast<int>(mu_.size()); }
  std::span<const double> mu() const noexcept { return mu_; }
  double q_scale() const noexcept { return q_scale_; }
  // Kept for completeness of the data model; no computation reads it.
  int sign() const noexcept { return sign_; }

private:
  std::vector<double> mu_;
  double q_scale_;
  int sign_;
};

bool is_prime(std::uint64_t n);

/// log p if n = p^k (k >= 1), 0 otherwise. von_mangoldt(0) is 0.
double von_mangoldt(std::uint64_t n);

/// c(p) = -a(p) log p. Throws std::invalid_argument if p is not prime.
double c_from_a_prime(double a_p, std::uint64_t p);

/// d * Lambda(n): the Ramanujan bound on |c(n)|.
double ramanujan_c_bound(std::uint64_t n, int degree);

/// Dirichlet coefficients a(1..M) and the log-derivative coefficients c(1..M)
/// they determine. Coefficients use the analytic normalisation.
class CoefficientData {
public:
  /// `a[0]` is a(1) and must equal 1 (std::invalid_argument otherwise).
  explicit CoefficientData(std::vector<double> a);

  /// Integer newform coefficients of weight k, divided by n^((k-1)/2).
  static CoefficientData from_newform(std::span<const std::int64_t> a, int weight);

  std::uint64_t max_index() const noexcept { return a_.size(); }
  bool contains(std::uint64_t n) const noexcept { return n >= 1 && n <= a_.size(); }

  /// Throws IncompleteData when n is out of range.
  double a(std::uint64_t n) const;
  double c(std::uint64_t n) const;

  /// True when |a(p)| <= degree (+ slack) for every prime p stored.
  bool satisfies_ramanujan(int degree, double slack = 1e-12) const;

private:
  std::vector<double> a_;
  std::vector<double> c_;
};

} // namespace eft
