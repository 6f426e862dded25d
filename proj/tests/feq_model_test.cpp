#include "eft/feq_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace {

using namespace eft;

// Trial-division factorisation: log p when n is a prime power p^k.
double brute_force_von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

// Coefficients of q * prod_{n>=1} (1 - q^n)^24 up to q^terms.
std::vector<std::int64_t> ramanujan_tau(int terms) {
  std::vector<std::int64_t> series(static_cast<std::size_t>(terms), 0);
  series[0] = 1;  // coefficient of q^0 in the product
  for (int n = 1; n < terms; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = terms - 1; i >= n; --i) series[i] -= series[i - n];
    }
  }
  std::vector<std::int64_t> tau(static_cast<std::size_t>(terms), 0);
  for (int i = 0; i + 1 < terms; ++i) tau[i + 1] = series[i];
  return std::vector<std::int64_t>(tau.begin() + 1, tau.end());  // tau(1), tau(2), ...
}

TEST(VonMangoldt, Examples) {
  EXPECT_NEAR(von_mangoldt(2), 0.6931472, 1e-7);
  EXPECT_EQ(von_mangoldt(6), 0.0);
  EXPECT_NEAR(von_mangoldt(8), 0.6931472, 1e-7);
  EXPECT_EQ(von_mangoldt(0), 0.0);
  EXPECT_EQ(von_mangoldt(1), 0.0);
}

TEST(VonMangoldt, AgreesWithTrialDivisionUpTo10000) {
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    ASSERT_EQ(von_mangoldt(n), brute_force_von_mangoldt(n)) << "n = " << n;
  }
}

TEST(IsPrime, SmallValues) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 97, 7919};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  for (std::uint64_t n : {0, 1, 4, 9, 91, 7917}) EXPECT_FALSE(is_prime(n)) << n;
}

TEST(PrimeCoefficient, Examples) {
  const double a2_tau = -24.0 / std::pow(2.0, 5.5);
  EXPECT_NEAR(a2_tau, -0.5303301, 1e-7);
  EXPECT_NEAR(c_from_a_prime(a2_tau, 2), 24 * std::numbers::ln2 / std::pow(2.0, 5.5), 1e-15);
  EXPECT_NEAR(c_from_a_prime(a2_tau, 2), 0.3675968, 1e-7);
  EXPECT_EQ(c_from_a_prime(0.0, 3), 0.0);
  EXPECT_NEAR(c_from_a_prime(2.0, 2), -1.3862944, 1e-7);
}

TEST(PrimeCoefficient, RejectsComposite) {
  EXPECT_THROW(c_from_a_prime(1.0, 4), std::invalid_argument);
  EXPECT_THROW(c_from_a_prime(1.0, 1), std::invalid_argument);
}

TEST(PrimeCoefficient, BoundedByRamanujanForPrimesUpTo100) {
  for (int d = 1; d <= 4; ++d) {
    for (std::uint64_t p = 2; p <= 100; ++p) {
      if (!is_prime(p)) continue;
      for (double a : {-1.0 * d, -0.5 * d, 0.0, 0.3 * d, 1.0 * d}) {
        EXPECT_LE(std::abs(c_from_a_prime(a, p)), ramanujan_c_bound(p, d) + 1e-15);
      }
    }
  }
}

TEST(PrimeCoefficient, LinearInCoefficient) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double lambda = u(rng);
    for (std::uint64_t p : {2, 3, 5, 97}) {
      EXPECT_NEAR(c_from_a_prime(lambda * a, p), lambda * c_from_a_prime(a, p), 1e-12);
    }
  }
}

TEST(RamanujanBound, Examples) {
  EXPECT_NEAR(ramanujan_c_bound(2, 2), 1.3862944, 1e-7);
  EXPECT_EQ(ramanujan_c_bound(15, 2), 0.0);
  EXPECT_NEAR(ramanujan_c_bound(2, 1), 0.6931472, 1e-7);
}

TEST(FunctionalEquationParams, Validation) {
  EXPECT_NO_THROW(FunctionalEquationParams({0.25, 0.75}, 3.0));
  EXPECT_THROW(FunctionalEquationParams({}, 1.0), std::invalid_argument);
  EXPECT_THROW(FunctionalEquationParams({-0.1}, 1.0), std::invalid_argument);
  EXPECT_THROW(FunctionalEquationParams({0.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(FunctionalEquationParams({0.0}, 1.0, 2), std::invalid_argument);
  const FunctionalEquationParams p({0.25, 0.75}, 2.5, -1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.sign(), -1);
  EXPECT_DOUBLE_EQ(p.q_scale(), 2.5);
}

TEST(CoefficientData, TauExpansionOracle) {
  const auto tau = ramanujan_tau(12);
  ASSERT_EQ(tau[0], 1);
  EXPECT_EQ(tau[1], -24);
  EXPECT_EQ(tau[2], 252);
  EXPECT_EQ(tau[3], -1472);
  EXPECT_EQ(tau[4], 4830);

  const auto data = CoefficientData::from_newform(tau, 12);
  EXPECT_NEAR(data.a(2), -0.5303301, 1e-7);
  EXPECT_NEAR(data.c(2), 0.3675968, 1e-7);
}

TEST(CoefficientData, PrimePowerRecurrence) {
  // For a degree-2 Euler factor with alpha beta = 1:
  // c(p^k) = -(alpha^k + beta^k) log p, alpha^2 + beta^2 = a(p)^2 - 2.
  const auto tau = ramanujan_tau(12);
  const auto data = CoefficientData::from_newform(tau, 12);
  const double a2 = data.a(2);
  const double a3 = data.a(3);
  EXPECT_NEAR(data.c(4), -(a2 * a2 - 2.0) * std::log(2.0), 1e-12);
  EXPECT_NEAR(data.c(8), -(a2 * a2 * a2 - 3.0 * a2) * std::log(2.0), 1e-12);
  EXPECT_NEAR(data.c(9), -(a3 * a3 - 2.0) * std::log(3.0), 1e-12);
  EXPECT_NEAR(data.c(6), 0.0, 1e-12);
  EXPECT_NEAR(data.c(10), 0.0, 1e-12);
  EXPECT_TRUE(data.satisfies_ramanujan(2));
}

TEST(CoefficientData, Errors) {
  EXPECT_THROW(CoefficientData({2.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(CoefficientData({}), std::invalid_argument);
  const CoefficientData d({1.0, -1.0});
  EXPECT_EQ(d.max_index(), 2u);
  EXPECT_TRUE(d.contains(2));
  EXPECT_FALSE(d.contains(3));
  EXPECT_ANY_THROW(d.c(3));
  EXPECT_ANY_THROW(d.a(0));
}

} // namespace
