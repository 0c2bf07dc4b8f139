#include <gtest/gtest.h>

#include <random>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/oracle.hpp"
#include "partcong/qseries.hpp"

using namespace partcong;
using namespace partcong::qseries;

namespace {

u32 neg(u64 ell) { return static_cast<u32>(ell - 1); }

// p((n+1)/24) mod ell from the parts recurrence
u64 pp(const std::vector<u64>& parts, i64 n) {
  if (n < -1 || (n + 1) % 24 != 0) return 0;
  return parts.at(static_cast<std::size_t>((n + 1) / 24));
}

EtaSeries random_series(std::mt19937_64& rng, u64 ell, int r, i64 N) {
  EtaSeries f = zero_series(ell, r, 1, N);
  for (auto& x : f.c) x = static_cast<u32>(rng() % ell);
  return f;
}

}  // namespace

TEST(EtaPower, PentagonalSigns) {
  const u64 ell = 13;
  const auto e = eta_power(1, ell, 200);
  EXPECT_EQ(e.r, 1);
  EXPECT_EQ(e.coeff(1), 1u);
  EXPECT_EQ(e.coeff(25), neg(ell));
  EXPECT_EQ(e.coeff(49), neg(ell));
  EXPECT_EQ(e.coeff(121), 1u);
  EXPECT_EQ(e.coeff(169), 1u);
  EXPECT_EQ(e.coeff(73), 0u);
  EXPECT_EQ(e.coeff(2), 0u);
  EXPECT_THROW(e.coeff(200), PrecisionShortfall);
}

TEST(EtaPower, MatchesNaiveProducts) {
  for (i64 r : {-13, -7, -1, 1, 4, 11, 24, 168}) {
    const u64 ell = 13;
    const i64 N = 24 * 300;
    const auto e = eta_power(r, ell, N);
    const auto want = oracle::naive_euler_power(r, ell, 300);
    for (i64 m = 0; m < 300; ++m) {
      const i64 n = r + 24 * m;
      if (n >= N) break;
      ASSERT_EQ(e.coeff(n), want[m]) << "r=" << r << " m=" << m;
    }
  }
}

TEST(EtaPower, InverseIsPartitionGenerator) {
  const u64 ell = 101;
  const auto inv = eta_power(-1, ell, 24 * 500);
  const auto parts = oracle::partitions_by_parts(500, ell);
  for (i64 m = 0; m < 500; ++m) ASSERT_EQ(inv.coeff(24 * m - 1), parts[m]) << m;
  const auto one = mul(inv, eta_power(1, ell, 24 * 500));
  EXPECT_EQ(one.coeff(0), 1u);
  for (i64 n = 24; n < 24 * 499; n += 24) ASSERT_EQ(one.coeff(n), 0u) << n;
  const auto back = inverse(inv);
  EXPECT_FALSE(series_equal_mod(back, eta_power(1, ell, back.precision), back.precision).has_value());
}

TEST(Operators, UOnPartitionGenerator) {
  const u64 ell = 13;
  const auto inv = eta_power(-1, ell, 24 * 200);
  const auto u = u_op(inv, 5);
  // 5 * 115 = 575 = 24 * 24 - 1
  EXPECT_EQ(u.coeff(115), 1575u % ell);
  EXPECT_EQ(u.r, 19);
}

TEST(Operators, TwistOnPartitionGenerator) {
  const auto inv = eta_power(-1, 13, 24 * 20);
  const auto tw = twist(inv, 5);
  EXPECT_EQ(tw.coeff(23), neg(13));  // (23/5) = -1, p(1) = 1
  EXPECT_EQ(tw.coeff(47), 11u);      // (47/5) = -1, p(2) = 2
  EXPECT_EQ(tw.coeff(-1), 1u);       // (-1/5) = 1, p(0) = 1
}

TEST(Operators, UAfterVIsIdentity) {
  std::mt19937_64 rng(7);
  for (u64 m : {5ull, 7ull, 11ull, 25ull}) {
    const auto f = random_series(rng, 17, 23, 24 * 100);
    const auto g = u_op(v_op(f, m), m);
    EXPECT_FALSE(series_equal_mod(g, f, f.precision).has_value()) << m;
    EXPECT_TRUE(v_op(f, m).support_ok());
  }
}

TEST(Operators, VSpreadsSupport) {
  const auto inv = eta_power(-1, 13, 24 * 50);
  const auto v = v_op(inv, 7);
  EXPECT_EQ(v.coeff(-7), 1u);
  EXPECT_EQ(v.coeff(-7 + 24 * 7), 1u);
  EXPECT_EQ(v.coeff(-7 + 24), 0u);
  EXPECT_TRUE(v.support_ok());
}

TEST(Operators, RejectNonUnitIndices) {
  const auto inv = eta_power(-1, 13, 240);
  EXPECT_THROW(u_op(inv, 6), std::invalid_argument);
  EXPECT_THROW(hecke_TQ2(inv, 3), std::invalid_argument);
}

TEST(Operators, AddSubScale) {
  std::mt19937_64 rng(9);
  const auto f = random_series(rng, 13, 23, 2400), g = random_series(rng, 13, 23, 2400);
  const auto h = sub(add(f, g), g);
  EXPECT_FALSE(series_equal_mod(h, f, 2400).has_value());
  const auto z = add(f, scale(f, -1));
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.first_nonzero().has_value());
}

TEST(Hecke, IsLinear) {
  std::mt19937_64 rng(11);
  const auto f = random_series(rng, 13, 23, 24 * 25 * 60), g = random_series(rng, 13, 23, 24 * 25 * 60);
  const auto lhs = hecke_TQ2(add(f, scale(g, 3)), 5);
  const auto rhs = add(hecke_TQ2(f, 5), scale(hecke_TQ2(g, 5), 3));
  EXPECT_FALSE(series_equal_mod(lhs, rhs, lhs.precision).has_value());
}

TEST(Hecke, MatchesPartitionFormOfIdentity) {
  // On f_{ell,delta} the operator is a(Q^2 n) + c1 (12n/Q) a(n) + c2 a(n/Q^2).
  for (int delta : {0, -1}) {
    const u64 ell = 17, Q = 7;
    const i64 N = 24 * 49 * 40;
    const auto f = f_ell_delta(ell, delta, N);
    const auto h = hecke_TQ2(f, Q);
    const auto parts = oracle::partitions_by_parts(N / 24 + 2, ell);
    const auto filt = [&](i64 n) -> u64 {
      return nt::jacobi(-n, static_cast<i64>(ell)) == delta ? pp(parts, n) : 0;
    };
    const int w2 = f.weight2;
    u64 c1 = nt::mod_pow(Q, (w2 - 3) / 2, ell);
    if (((w2 - 1) / 2) % 2 == 1 && nt::jacobi(-1, Q) < 0) c1 = (ell - c1) % ell;
    const u64 c2 = nt::mod_pow(Q, w2 - 2, ell);
    for (i64 n = -1; n < h.precision; n += 24) {
      u64 want = filt(49 * n);
      want = (want + c1 * ((nt::jacobi(12 * n, Q) + static_cast<i64>(ell)) % ell) % ell * filt(n)) % ell;
      if (n % 49 == 0) want = (want + c2 * filt(n / 49)) % ell;
      ASSERT_EQ(h.coeff(n), want) << "delta=" << delta << " n=" << n;
    }
  }
}

TEST(Shimura, LeadingAndPrimeCoefficients) {
  const u64 ell = 13;
  const auto f = f_ell_delta(ell, -1, 24 * 2000);
  for (u64 t : {23ull, 47ull}) {
    const auto F = shimura_lift(f, t, 12);
    EXPECT_EQ(F.coeff(1), f.coeff(static_cast<i64>(t)));
    const int w2 = f.weight2;
    for (i64 p : {5, 7, 11}) {
      const int chi = nt::jacobi(12 * static_cast<i64>(t), p) * (((w2 - 1) / 2) % 2 ? nt::jacobi(-1, p) : 1);
      const u64 w = nt::mod_pow(p, (w2 - 3) / 2, ell);
      const u64 want = (f.coeff(static_cast<i64>(t) * p * p) + (chi < 0 ? ell - w : w) * f.coeff(static_cast<i64>(t))) % ell;
      EXPECT_EQ(F.coeff(p), want) << "t=" << t << " p=" << p;
    }
  }
  EXPECT_THROW(shimura_lift(f, 9, 5), std::invalid_argument);
  EXPECT_THROW(shimura_lift(f, 23, 1000), PrecisionShortfall);
}

TEST(Shimura, IntegralHeckeDefinition) {
  IntegralSeries F;
  F.ell = 13;
  F.weight = 4;
  F.precision = 50;
  for (i64 n = 0; n < 50; ++n) F.c.push_back(static_cast<u32>(n % 13));
  const auto G = hecke_TQ(F, 5);
  EXPECT_EQ(G.precision, 10);
  EXPECT_EQ(G.coeff(1), 5u);
  EXPECT_EQ(G.coeff(5), (25 % 13 + 125 * 1) % 13);
}

TEST(PartitionForms, ZeroForRamanujanPrimes) {
  EXPECT_TRUE(f_ell_delta(5, 0, 24 * 500).is_zero());
  EXPECT_TRUE(f_ell_delta(7, 0, 24 * 500).is_zero());
  EXPECT_TRUE(f_ell_delta(11, 0, 24 * 500).is_zero());
  EXPECT_FALSE(f_ell_delta(13, 0, 24 * 500).is_zero());
  EXPECT_FALSE(f_ell_delta(5, -1, 24 * 500).is_zero());
}

TEST(PartitionForms, MatchesNaiveFilter) {
  for (u64 ell : {13ull, 17ull, 29ull})
    for (int delta : {0, -1}) {
      const i64 N = 24 * 400;
      const auto f = f_ell_delta(ell, delta, N);
      const auto want = oracle::naive_f_ell_delta(ell, delta, N);
      for (i64 n = 23; n < N; n += 24) ASSERT_EQ(f.coeff(n), want[n]) << ell << " " << delta << " " << n;
    }
  EXPECT_THROW(f_ell_delta(13, 1, 100), std::invalid_argument);
}

TEST(PartitionForms, ConstructionMultiplier) {
  for (u64 ell : {13ull, 17ull, 19ull}) {
    const auto F = construct_F_ell(ell, 2400);
    EXPECT_EQ(F.r, static_cast<int>((24 - ell % 24) % 24)) << ell;
    EXPECT_EQ(F.precision, 2400);
    EXPECT_TRUE(F.support_ok());
  }
}

TEST(Comparison, FirstDifference) {
  const auto a = eta_power(-1, 13, 480);
  auto b = a;
  EXPECT_FALSE(series_equal_mod(a, b, 480).has_value());
  b.c[5] = (b.c[5] + 1) % 13;
  EXPECT_EQ(series_equal_mod(a, b, 480), std::optional<i64>(-1 + 24 * 5));
  EXPECT_FALSE(series_equal_mod(a, b, 24 * 5 - 1).has_value());
  EXPECT_THROW(series_equal_mod(a, b, 481), PrecisionShortfall);
}

TEST(Obstruction, ZeroSpaces) {
  auto f = zero_series(13, 1, 2, 100);
  f.chi_minus1 = 1;
  // (1, 24) = 1 and 2k - r = 1 != 0 (mod 4)
  EXPECT_TRUE(f.obstruction_forces_zero());
  f.r = 2;
  EXPECT_FALSE(f.obstruction_forces_zero());
}
