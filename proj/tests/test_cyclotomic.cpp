#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <numeric>

#include "partcong/cyclotomic.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/oracle.hpp"

using namespace partcong;
using namespace partcong::cyclo;

namespace {

using cd = std::complex<double>;

cd zeta(u64 c, i64 e) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(c)); }

cd evaluate(const CycloVector& v) {
  cd s = 0;
  for (std::size_t e = 0; e < v.counts.size(); ++e) s += static_cast<double>(v.counts[e]) * zeta(v.c, static_cast<i64>(e));
  return s;
}

cd numeric_kloosterman(i64 a, i64 b, u64 c) {
  cd s = 0;
  for (u64 n = 1; n <= c; ++n)
    if (std::gcd(n, c) == 1) s += zeta(c, a * static_cast<i64>(n) + b * static_cast<i64>(nt::mod_inv(n, c)));
  return s;
}

cd numeric_salie(i64 a, i64 b, u64 c) {
  cd s = 0;
  for (u64 n = 1; n <= c; ++n)
    if (std::gcd(n, c) == 1)
      s += static_cast<double>(nt::jacobi(n, c)) * zeta(c, a * static_cast<i64>(n) + b * static_cast<i64>(nt::mod_inv(n, c)));
  return s;
}

CycloVector from_map(u64 c, std::initializer_list<std::pair<int, i64>> m) {
  auto v = CycloVector::zero(c);
  for (auto [e, k] : m) v.counts[e] = k;
  return v;
}

}  // namespace

TEST(Kloosterman, Examples) {
  EXPECT_EQ(kloosterman(1, 1, 5), from_map(5, {{0, 2}, {2, 1}, {3, 1}}));
  EXPECT_EQ(kloosterman(0, 0, 7), from_map(7, {{0, 6}}));
  EXPECT_EQ(kloosterman(0, 0, 15), from_map(15, {{0, 8}}));
  EXPECT_EQ(kloosterman(1, 0, 3), from_map(3, {{1, 1}, {2, 1}}));
  EXPECT_EQ(kloosterman(1, 1, 5).total(), 4);
}

TEST(Kloosterman, MatchesFloatingPoint) {
  for (u64 c : {1ull, 3ull, 5ull, 8ull, 12ull, 13ull, 25ull, 49ull})
    for (i64 a = -3; a < 5; ++a)
      for (i64 b = 0; b < 4; ++b) ASSERT_LT(std::abs(evaluate(kloosterman(a, b, c)) - numeric_kloosterman(a, b, c)), 1e-9);
}

TEST(Kloosterman, RealValuedAndSymmetric) {
  for (u64 c : {7ull, 11ull, 21ull}) {
    const auto k = kloosterman(2, 5, c);
    EXPECT_TRUE(equal_in_ring(k, galois(k, -1)));
    EXPECT_EQ(kloosterman(2, 5, c), kloosterman(5, 2, c));
  }
}

TEST(Salie, MatchesFloatingPoint) {
  for (u64 c : {1ull, 3ull, 5ull, 9ull, 13ull, 25ull})
    for (i64 a = 0; a < 5; ++a)
      for (i64 b = 0; b < 4; ++b) ASSERT_LT(std::abs(evaluate(salie(a, b, c)) - numeric_salie(a, b, c)), 1e-9);
}

TEST(Salie, Examples) {
  EXPECT_THROW(salie(1, 1, 8), std::invalid_argument);
  EXPECT_EQ(salie(1, 1, 1), CycloVector::unit(1));
  // modulus Q^2 with Q | a: the sum vanishes
  EXPECT_TRUE(equal_in_ring(salie(5, 3, 25), CycloVector::zero(25)));
  EXPECT_FALSE(equal_in_ring(salie(1, 1, 25), CycloVector::zero(25)));
}

TEST(Gauss, SquareAndGaloisRelation) {
  const auto g = gauss(1, 5);
  EXPECT_EQ(as_rational_integer(ring_mul(g, g)), std::optional<i64>(5));
  for (u64 d : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    const auto g1 = gauss(1, d);
    const i64 sign = nt::jacobi(-1, d);
    EXPECT_EQ(as_rational_integer(ring_mul(g1, g1)), std::optional<i64>(sign * static_cast<i64>(d))) << d;
    for (i64 a = 1; a < static_cast<i64>(d); ++a) {
      EXPECT_TRUE(equal_in_ring(gauss(a, d), galois(g1, a)));
      EXPECT_TRUE(equal_in_ring(gauss(a, d), g1 * nt::jacobi(a, d)));
    }
  }
}

TEST(Ring, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<i64>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(5), (std::vector<i64>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (std::vector<i64>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (std::vector<i64>{1, 0, -1, 0, 1}));
  // 1 + zeta + ... + zeta^4 = 0
  const auto s = from_map(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
  EXPECT_TRUE(equal_in_ring(s, CycloVector::zero(5)));
  EXPECT_EQ(as_rational_integer(kloosterman(0, 1, 5)), std::optional<i64>(-1));
  EXPECT_FALSE(as_rational_integer(kloosterman(1, 1, 5)).has_value());
}

TEST(Vanishing, Verdicts) {
  EXPECT_EQ(vanishes_mod_ell(CycloVector::zero(5), 13), Vanishing::VanishesEverywhere);
  EXPECT_EQ(vanishes_mod_ell(CycloVector::unit(5), 13), Vanishing::NonvanishingEverywhere);
  EXPECT_EQ(vanishes_mod_ell(CycloVector::constant(5, 26), 13), Vanishing::VanishesEverywhere);
  EXPECT_EQ(vanishes_mod_ell(kloosterman(1, 1, 5), 7), Vanishing::NonvanishingEverywhere);
  EXPECT_THROW(vanishes_mod_ell(kloosterman(1, 1, 15), 7), std::invalid_argument);
}

TEST(Vanishing, PartialSplitting) {
  const auto k = kloosterman(1, 1, 7);
  // K(1,1,7) has norm 13 in the real cubic subfield
  EXPECT_EQ(vanishes_mod_ell(k, 13), Vanishing::VanishesSomewhere);
  EXPECT_EQ(vanishes_mod_ell(k, 17), Vanishing::NonvanishingEverywhere);
}

TEST(HyperKloosterman, TrivialAndSums) {
  const u64 Q = 11;
  EXPECT_EQ(as_rational_integer(hyper_kloosterman(0, 3, Q)), std::optional<i64>(Q - 1));
  auto sum = CycloVector::zero(Q);
  for (i64 a = 0; a < static_cast<i64>(Q); ++a) sum = sum + hyper_kloosterman(1, a, Q);
  EXPECT_TRUE(equal_in_ring(sum, CycloVector::zero(Q)));
  EXPECT_TRUE(equal_in_ring(hyper_kloosterman(2, 3, Q), hyper_kloosterman(1, 12, Q)));
}

TEST(ClassRep, Examples) {
  EXPECT_EQ(kloosterman_class_rep(2, 2, 7), (ClassRep{1, 1}));
  EXPECT_EQ(kloosterman_class_rep(2, 3, 7), (ClassRep{1, 3}));
  EXPECT_EQ(kloosterman_class_rep(1, 2, 5), (ClassRep{1, 2}));
  EXPECT_EQ(kloosterman_class_rep(3, 6, 13), (ClassRep{1, 2}));
  for (i64 a = 1; a < 13; ++a)
    for (i64 b = 1; b < 13; ++b) {
      const auto rep = kloosterman_class_rep(a, b, 13);
      const auto k = kloosterman(a, b, 13), r = kloosterman(rep.a, rep.c, 13);
      bool conjugate = false;
      for (i64 u = 1; u < 13 && !conjugate; ++u) conjugate = equal_in_ring(k, galois(r, u));
      EXPECT_TRUE(conjugate) << a << " " << b;
      EXPECT_EQ(vanishes_mod_ell(k, 79), vanishes_mod_ell(r, 79));
    }
}
