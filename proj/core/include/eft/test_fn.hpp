#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

namespace eft {

/// Integers n >= 2 with log(n) / (2 pi) strictly inside the support of f-hat.
struct SupportWindow {
  std::uint64_t n_min = 2;
  std::uint64_t n_max = 1;

  std::vector<std::uint64_t> indices() const;
  bool contains(std::uint64_t n) const noexcept { return n >= n_min && n <= n_max; }
};

/// Fejer kernel pair with support half-width delta:
///   f(x)     = delta * (sin(pi delta x) / (pi delta x))^2
///   f_hat(x) = max(0, 1 - |x| / delta)
/// using f_hat(x) = integral f(u) exp(-2 pi i u x) du.
class FejerTestFunction {
public:
  /// delta = 1 / (2 pi): f(x) = sin^2(x/2) / (2 pi (x/2)^2), f_hat sees only n = 2.
  static constexpr double kDefaultDelta = 0.5 * std::numbers::inv_pi;

  /// Throws std::invalid_argument unless delta > 0.
  explicit FejerTestFunction(double delta = kDefaultDelta);

  double delta() const noexcept { return delta_; }

  double f(double x) const noexcept;
  double f_hat(double x) const noexcept;

  /// f-hat evaluated at log(n) / (2 pi).
  double f_hat_at_log(std::uint64_t n) const noexcept;

  /// Throws DegenerateSupport when exp(2 pi delta) <= 2.
  SupportWindow support_window() const;

  /// f(x) <= 1 / (pi^2 delta x^2) for x != 0.
  double envelope(double x) const noexcept;

private:
  double delta_;
};

inline double eval_f(const FejerTestFunction& tf, double x) noexcept { return tf.f(x); }
inline double eval_f_hat(const FejerTestFunction& tf, double x) noexcept { return tf.f_hat(x); }
inline SupportWindow support_window(const FejerTestFunction& tf) { return tf.support_window(); }

} // namespace eft
