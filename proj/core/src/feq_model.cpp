#include "eft/feq_model.hpp"

#include "eft/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eft {

FunctionalEquationParams::FunctionalEquationParams(std::vector<double> mu, double q_scale,
                                                   int sign)
    : mu_(std::move(mu)), q_scale_(q_scale), sign_(sign) {
  if (mu_.empty()) {
    throw std::invalid_argument("functional equation needs degree >= 1");
  }
  for (double m : mu_) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("spectral parameters must be finite and >= 0");
    }
  }
  if (!(q_scale_ > 0.0) || !std::isfinite(q_scale_)) {
    throw std::invalid_argument("Q must be positive");
  }
  if (sign_ != 1 && sign_ != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 0;
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) return std::log(static_cast<double>(n)); // n is prime
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double c_from_a_prime(double a_p, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("c_from_a_prime: " + std::to_string(p) + " is not prime");
  }
  return -a_p * std::log(static_cast<double>(p));
}

double ramanujan_c_bound(std::uint64_t n, int degree) {
  return degree * von_mangoldt(n);
}

CoefficientData::CoefficientData(std::vector<double> a) : a_(std::move(a)) {
  if (a_.empty() || a_[0] != 1.0) {
    throw std::invalid_argument("Dirichlet coefficients must start with a(1) = 1");
  }
  // L' = (L'/L) * L as Dirichlet series:
  //   -a(n) log n = sum_{d | n} c(d) a(n/d)
  const std::size_t m = a_.size();
  c_.assign(m, 0.0);
  for (std::size_t n = 2; n <= m; ++n) {
    double acc = -a_[n - 1] * std::log(static_cast<double>(n));
    for (std::size_t d = 2; d * d <= n; ++d) {
      if (n % d != 0) continue;
      const std::size_t e = n / d;
      acc -= c_[d - 1] * a_[e - 1];
      if (e != d) acc -= c_[e - 1] * a_[d - 1];
    }
    // the d = 1 term has c(1) = 0; the d = n term is c(n) * a(1)
    c_[n - 1] = acc;
  }
}

CoefficientData CoefficientData::from_newform(std::span<const std::int64_t> a, int weight) {
  std::vector<double> out(a.size());
  const double shift = 0.5 * (weight - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<double>(a[i]) / std::pow(static_cast<double>(i + 1), shift);
  }
  return CoefficientData(std::move(out));
}

double CoefficientData::a(std::uint64_t n) const {
  if (!contains(n)) {
    throw IncompleteData("a(" + std::to_string(n) + ") not available");
  }
  return a_[n - 1];
}

double CoefficientData::c(std::uint64_t n) const {
  if (!contains(n)) {
    throw IncompleteData("c(" + std::to_string(n) + ") not available");
  }
  return c_[n - 1];
}

bool CoefficientData::satisfies_ramanujan(int degree, double slack) const {
  for (std::uint64_t p = 2; p <= a_.size(); ++p) {
    if (is_prime(p) && std::abs(a_[p - 1]) > degree + slack) return false;
  }
  return true;
}

} // namespace eft
