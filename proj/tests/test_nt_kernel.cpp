#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/oracle.hpp"

using namespace partcong;
using namespace partcong::nt;

namespace {

// Jacobi symbol by factoring n and multiplying Euler-criterion Legendre symbols.
int jacobi_by_factoring(i64 a, u64 n) {
  int s = 1;
  for (u64 p = 3; n > 1; p += 2) {
    while (n % p == 0) {
      s *= oracle::euler_legendre(a, p);
      n /= p;
    }
  }
  return s;
}

using cd = std::complex<double>;

cd eta(cd tau) {
  const cd q = std::exp(2.0 * std::numbers::pi * cd(0, 1) * tau);
  cd prod = 1, qn = q;
  for (int n = 1; n < 4000 && std::abs(qn) > 1e-18; ++n, qn *= q) prod *= 1.0 - qn;
  return std::exp(2.0 * std::numbers::pi * cd(0, 1) * tau / 24.0) * prod;
}

// nu(gamma) = eta(gamma tau) / ((c tau + d)^(1/2) eta(tau)), principal branch
int numeric_multiplier_exponent(i64 a, i64 b, i64 c, i64 d) {
  const cd tau(-static_cast<double>(d) / c + 0.13, 1.0 / c);
  const cd g = (static_cast<double>(a) * tau + static_cast<double>(b)) / (static_cast<double>(c) * tau + static_cast<double>(d));
  const cd ratio = eta(g) / (std::sqrt(static_cast<double>(c) * tau + static_cast<double>(d)) * eta(tau));
  const double k = std::arg(ratio) / (2 * std::numbers::pi) * 24;
  EXPECT_NEAR(std::abs(ratio), 1.0, 1e-6);
  EXPECT_NEAR(k, std::round(k), 1e-6);
  return static_cast<int>(((static_cast<long>(std::lround(k)) % 24) + 24) % 24);
}

}  // namespace

TEST(Jacobi, SmallValues) {
  EXPECT_EQ(jacobi(1, 3), 1);
  EXPECT_EQ(jacobi(2, 7), 1);
  EXPECT_EQ(jacobi(3, 7), -1);
  EXPECT_EQ(jacobi(0, 1), 1);
  EXPECT_EQ(jacobi(21, 7), 0);
}

TEST(Jacobi, AgreesWithFactoredEulerCriterion) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 3000; ++i) {
    const u64 n = 2 * (rng() % 5000) + 1;
    const i64 a = static_cast<i64>(rng() % 200000) - 100000;
    ASSERT_EQ(jacobi(a, static_cast<i64>(n)), jacobi_by_factoring(a, n)) << a << "/" << n;
  }
}

TEST(Jacobi, RejectsEvenOrNonpositive) {
  EXPECT_THROW(jacobi(3, 8), std::invalid_argument);
  EXPECT_THROW(jacobi(3, 0), std::invalid_argument);
  EXPECT_THROW(jacobi(3, -5), std::invalid_argument);
}

TEST(ModInv, Examples) {
  EXPECT_EQ(mod_inv(1, 97), 1u);
  EXPECT_EQ(mod_inv(24, 5), 4u);
  EXPECT_EQ(mod_inv(24, 7), 5u);
  EXPECT_EQ(mod_inv(-1, 7), 6u);
  EXPECT_THROW(mod_inv(6, 9), NotInvertible);
}

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(5, 0, 7), 1u);
  EXPECT_EQ(mod_pow(3, -1, 7), 5u);
  EXPECT_EQ(mod_pow(2, 10, 1000), 24u);
  EXPECT_EQ(mod_pow(-2, 3, 11), 3u);
  EXPECT_THROW(mod_pow(3, -2, 9), NotInvertible);
}

TEST(Primality, Examples) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(67));
  EXPECT_FALSE(is_prime(561));
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_TRUE(is_prime(18446744073709551557ull));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
}

TEST(Primality, MatchesTrialDivision) {
  for (u64 n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::trial_prime(n)) << n;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng() % 10'000'000'000ull;
    ASSERT_EQ(is_prime(n), oracle::trial_prime(n)) << n;
  }
}

TEST(Primality, ProbablePrimeNeverRejectsPrimes) {
  for (u64 n = 2; n < 50000; ++n)
    if (oracle::trial_prime(n)) {
      ASSERT_TRUE(is_probable_prime(n)) << n;
    }
}

TEST(Crt, Examples) {
  const Congruence one[] = {{0, 1}};
  EXPECT_EQ(crt_combine(one), (Congruence{0, 1}));
  const Congruence a[] = {{2, 3}, {3, 5}};
  EXPECT_EQ(crt_combine(a), (Congruence{8, 15}));
  const Congruence b[] = {{1, 4}, {3, 7}};
  EXPECT_EQ(crt_combine(b), (Congruence{17, 28}));
  const Congruence bad[] = {{1, 4}, {3, 6}};
  EXPECT_THROW(crt_combine(bad), std::invalid_argument);
}

TEST(Crt, MatchesScan) {
  std::mt19937_64 rng(3);
  const u64 mods[] = {3, 4, 5, 7, 11, 13};
  for (int it = 0; it < 200; ++it) {
    std::vector<Congruence> cs;
    u64 M = 1;
    for (u64 m : mods)
      if (rng() % 2) {
        cs.push_back({rng() % m, m});
        M *= m;
      }
    const auto got = crt_combine(cs);
    ASSERT_EQ(got.modulus, M);
    for (const auto& c : cs) ASSERT_EQ(got.residue % c.modulus, c.residue);
  }
}

TEST(EtaMultiplier, EpsilonD) {
  EXPECT_EQ(epsilon_d(1).exponent(), 0);
  EXPECT_EQ(epsilon_d(3).exponent(), 6);
  EXPECT_EQ(epsilon_d(7).exponent(), 6);
  EXPECT_EQ(epsilon_d(5).exponent(), 0);
  EXPECT_THROW(epsilon_d(4), std::invalid_argument);
}

TEST(EtaMultiplier, Inversion) {
  // S = (0 -1; 1 0): eta(-1/tau) = sqrt(tau/i) eta(tau), so nu(S) = e(-1/8)
  EXPECT_EQ(eta_multiplier(0, -1, 1, 0).exponent(), 21);
}

TEST(EtaMultiplier, TranslationShift) {
  const i64 g[][4] = {{0, -1, 1, 0}, {1, 0, 1, 1}, {2, 1, 5, 3}, {3, -1, 7, -2}, {5, 2, 12, 5}};
  for (const auto& m : g) {
    const auto a = m[0], b = m[1], c = m[2], d = m[3];
    EXPECT_EQ(eta_multiplier(a, a + b, c, c + d), eta_multiplier(a, b, c, d) * Root24(1)) << a << b << c << d;
  }
}

TEST(EtaMultiplier, MatchesNumericTransformation) {
  const i64 g[][4] = {{0, -1, 1, 0}, {1, 0, 1, 1}, {2, 1, 5, 3}, {3, -1, 7, -2}, {1, 0, 2, 1},
                      {1, 1, 2, 3}, {5, 2, 12, 5}, {-1, 0, 4, -1}, {2, -1, 3, -1}, {7, 3, 2, 1}};
  for (const auto& m : g)
    EXPECT_EQ(eta_multiplier(m[0], m[1], m[2], m[3]).exponent(), numeric_multiplier_exponent(m[0], m[1], m[2], m[3]))
        << m[0] << " " << m[1] << " " << m[2] << " " << m[3];
}

TEST(EtaMultiplier, RejectsBadMatrices) {
  EXPECT_THROW(eta_multiplier(1, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(eta_multiplier(1, 1, 1, 1), std::invalid_argument);
}

TEST(Sieve, PrimesInRange) {
  const auto ps = primes_in(1'000'000, 1'001'000);
  std::vector<u64> want;
  for (u64 n = 1'000'000; n <= 1'001'000; ++n)
    if (oracle::trial_prime(n)) want.push_back(n);
  EXPECT_EQ(ps, want);
}

TEST(Misc, SquarefreeAndDivisors) {
  EXPECT_TRUE(is_squarefree(1));
  EXPECT_TRUE(is_squarefree(35));
  EXPECT_FALSE(is_squarefree(45));
  EXPECT_EQ(prime_divisors(360), (std::vector<u64>{2, 3, 5}));
  EXPECT_EQ(isqrt(99), 9u);
  EXPECT_EQ(isqrt(100), 10u);
  EXPECT_EQ(isqrt(~0ull), 4294967295u);
}
