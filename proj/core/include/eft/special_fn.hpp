#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace eft {

struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;
};

/// psi(z) = Gamma'/Gamma(z).
///
/// Shifts with psi(z) = psi(z + 1) - 1/z until Re z >= 10, then sums the
/// asymptotic series log z - 1/(2z) - sum_{n=1}^{7} B_2n / (2n z^2n).
/// Arguments with Re z < 1/2 go through the reflection formula first.
/// Throws PoleError at z = 0, -1, -2, ...
std::complex<double> digamma(std::complex<double> z);

/// Re psi(re + i im). Absolute error below 1e-12 for |z| <= 1e6.
double digamma_re(ComplexPoint z);

enum class TailModel {
  /// |g(t)| <= C (1 + log t) / t^2 on average; used both as a stopping bound
  /// and as the asymptotic model for extrapolating the tail.
  LogOverTSquared,
};

struct QuadratureSpec {
  double tolerance = 1e-8;        // absolute
  double max_halfwidth = 1e7;     // largest T tried before NonConvergence
  double initial_halfwidth = 16;  // first T of the doubling ladder (>= 10)
  double panel_width = 8.0;       // initial Gauss-Kronrod panel width
  std::size_t max_panels = 4'000'000;
  TailModel tail_model = TailModel::LogOverTSquared;

  /// Throws std::invalid_argument when the invariants are violated.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double halfwidth = 0.0;     // final T
  double tail = 0.0;          // extrapolated contribution of |t| > T
  std::size_t panels = 0;
  std::size_t evaluations = 0;
};

/// Integral over the real line of an even integrand with log(t)/t^2 decay.
///
/// Integrates [-T, T] with adaptive Gauss-Kronrod panels and doubles T. The
/// loop ends as soon as the a-priori tail bound C (1 + log T) / T drops below
/// tolerance / 2, or once successive tail-extrapolated values agree to
/// tolerance / 2. Throws NonConvergence with the achieved error otherwise.
QuadratureResult integrate_even_decaying_report(const std::function<double(double)>& g,
                                                const QuadratureSpec& spec = {});

double integrate_even_decaying(const std::function<double(double)>& g,
                               const QuadratureSpec& spec = {});

/// Adaptive G10K21 quadrature on [a, b] to an absolute tolerance.
/// Starts from panels of width <= `panel_width`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& g, double a, double b,
                                    double tolerance, double panel_width = 2.0,
                                    std::size_t max_panels = 4'000'000);

} // namespace eft
