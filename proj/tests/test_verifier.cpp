#include <gtest/gtest.h>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/oracle.hpp"
#include "partcong/qseries.hpp"
#include "partcong/verifier.hpp"

using namespace partcong;
using namespace partcong::verify;

namespace {

// a(n) of f_{ell,delta} from the parts recurrence
struct NaiveForm {
  u64 ell;
  int delta;
  std::vector<u64> parts;
  NaiveForm(u64 l, int d, i64 n_max) : ell(l), delta(d), parts(oracle::partitions_by_parts(n_max / 24 + 2, l)) {}
  u64 operator()(i64 n) const {
    if (n < -1 || (n + 1) % 24 != 0) return 0;
    if (oracle::euler_legendre(-n, ell) != delta) return 0;
    return parts.at(static_cast<std::size_t>((n + 1) / 24));
  }
};

u64 sres(int s, u64 ell) { return s < 0 ? ell - 1 : static_cast<u64>(s); }

}  // namespace

TEST(Hecke, RamanujanFormIsTrivial) {
  EXPECT_TRUE(zero_form(5, 0));
  EXPECT_TRUE(zero_form(11, 0));
  EXPECT_FALSE(zero_form(5, -1));
  EXPECT_FALSE(zero_form(13, 0));
  EXPECT_EQ(check_hecke_identity(7, 0, 13, 100).status, Status::TriviallyConsistent);
}

TEST(Hecke, SeventeenFalsifiedAtSmallN) {
  const auto r = check_hecke_identity(17, 0, 67, 2000);
  ASSERT_TRUE(r.falsified());
  EXPECT_LE(r.witness, 2000);
  // replay from the parts recurrence
  const NaiveForm f(17, 0, 67 * 67 * (r.witness + 1));
  const i64 n = r.witness;
  const u64 ell = 17;
  u64 v = f(67 * 67 * n);
  v = (v + nt::mod_pow(67, -2, ell) * sres(nt::jacobi(-12 * n, 67), ell) % ell * f(n)) % ell;
  if (n % (67 * 67) == 0) v = (v + nt::mod_pow(67, -3, ell) * f(n / (67 * 67))) % ell;
  EXPECT_NE(v, 0u);
}

TEST(Hecke, AtkinCaseConsistent) {
  const auto r = check_hecke_identity(13, -1, 103, 2000);
  EXPECT_EQ(r.status, Status::ConsistentUpTo);
  EXPECT_GE(r.bound, 2000);
}

TEST(Hecke, CeilingIsReported) {
  EXPECT_THROW(check_hecke_identity(13, -1, 100'003, 5000), TableShortfall);
}

TEST(UQVQ, FalsifiedForBothSigns) {
  for (int eps : {1, -1}) {
    const auto r = check_uqvq(13, 0, 5, eps, 24 * 500);
    ASSERT_TRUE(r.falsified()) << eps;
    const NaiveForm f(13, 0, 5 * 24 * 500);
    const i64 n = r.witness;
    const u64 lhs = f(5 * n);
    const u64 scale = nt::mod_inv(5, 13) * sres(-eps * nt::jacobi(-12, 5), 13) % 13;
    const u64 rhs = n % 5 == 0 ? scale * f(n / 5) % 13 : 0;
    EXPECT_NE(lhs, rhs) << eps;
  }
}

TEST(Annihilator, EmptyProductIsTheFormItself) {
  const auto r = check_squarefree_annihilator(13, 0, {}, 6, 2400);
  ASSERT_TRUE(r.falsified());
  EXPECT_EQ(r.witness, *qseries::f_ell_delta(13, 0, 2400).first_nonzero());
}

TEST(Annihilator, OnePrimeMatchesUQVQ) {
  for (u64 Q : {5ull, 7ull, 11ull, 17ull}) {
    const i64 beta0 = 6;  // 24 beta0 - 1 = 11 * 13
    if (Q == 11) continue;
    const int eps = nt::jacobi(24 * beta0 - 1, static_cast<i64>(Q));
    const auto a = check_squarefree_annihilator(13, 0, {Q}, beta0, 2400);
    const auto u = check_uqvq(13, 0, Q, eps, 2400);
    EXPECT_EQ(a.falsified(), u.falsified()) << Q;
    if (a.falsified()) {
      EXPECT_EQ(a.witness, u.witness) << Q;
    }
  }
}

TEST(Annihilator, TwoPrimes) {
  const auto r = check_squarefree_annihilator(13, 0, {5, 7}, 6, 13000);
  EXPECT_TRUE(r.falsified());
  EXPECT_THROW(check_squarefree_annihilator(13, 0, {5, 5}, 6, 100), std::invalid_argument);
  EXPECT_THROW(check_squarefree_annihilator(13, 0, {11}, 6, 100), std::invalid_argument);
  EXPECT_THROW(check_squarefree_annihilator(13, -1, {5}, 6, 100), std::invalid_argument);
  EXPECT_THROW(check_squarefree_annihilator(13, 0, {5, 7}, 6, 10), PrecisionShortfall);
}

TEST(QuadConditions, OneFalsified) {
  const auto r = check_quad_condition_one(17, 0, 5, 24 * 2000);
  ASSERT_TRUE(r.falsified());
  EXPECT_EQ(r.witness % 24, 23);
}

TEST(QuadConditions, OneAsOperatorIdentity) {
  // f|U_Q^2 - (-12/Q) Q^-1 twist(f) - Q^-2 f|V_Q^2 has its first nonzero term at the witness
  const u64 ell = 17, Q = 5;
  const i64 N = 24 * 2000;
  const auto r = check_quad_condition_one(ell, 0, Q, N);
  ASSERT_TRUE(r.falsified());
  const auto f = qseries::f_ell_delta(ell, 0, N);
  const auto u = qseries::u_op(f, Q * Q);
  const i64 P = u.precision;
  const auto tw = qseries::truncate(qseries::twist(f, Q), P);
  const auto v = qseries::v_op(f, Q * Q, P);
  const i64 c1 = static_cast<i64>(nt::mod_inv(Q, ell)) * nt::jacobi(-12, Q);
  const auto d = qseries::sub(qseries::sub(u, qseries::scale(tw, c1)), qseries::scale(v, static_cast<i64>(nt::mod_pow(Q, -2, ell))));
  EXPECT_EQ(d.first_nonzero(), std::optional<i64>(r.witness));
}

TEST(QuadConditions, TwoFalsified) {
  const auto r = check_quad_condition_two(17, 0, 5, 5000);
  ASSERT_TRUE(r.falsified());
  EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(RuleOut, SeventeenBothDeltas) {
  const auto rep = rule_out_quadratic(17, 5);
  EXPECT_TRUE(rep.ruled_out(0));
  EXPECT_TRUE(rep.ruled_out(-1));
}

TEST(RuleOut, ThirteenDeltaZero) {
  const auto rep = rule_out_quadratic(13, 5);
  EXPECT_TRUE(rep.ruled_out(0));
}

TEST(RuleOut, ThirteenDeltaMinusOneFalsifiedByConditionOne) {
  // The Q^2 relation fails at n = 47 here, which rules the case out.
  const auto r = check_quad_condition_one(13, -1, 5, 24 * 4000);
  ASSERT_TRUE(r.falsified());
  EXPECT_EQ(r.witness, 47);
  EXPECT_TRUE(rule_out_quadratic(13, 5).ruled_out(-1));
}

TEST(RuleOut, RamanujanPrimesAreFlagged) {
  const auto rep = rule_out_quadratic(5, 7);
  EXPECT_EQ(rep.per_delta[0].verdict, Verdict::Ramanujan);
}

TEST(BWitness, FindsSignedWitness) {
  for (int eps : {1, -1}) {
    const auto w = b_witness(13, 0, 101, eps, 400);
    ASSERT_TRUE(w.found);
    EXPECT_EQ(nt::jacobi(static_cast<i64>(w.n), 101), eps);
  }
}

TEST(Commutation, ShimuraAndHecke) {
  for (int delta : {0, -1})
    for (u64 t : {23ull, 47ull}) {
      const auto c = shimura_commutation_test(13, delta, 5, t, 24 * 20000);
      EXPECT_TRUE(c.pass) << delta << " " << t << " at " << c.first_mismatch;
      EXPECT_GT(c.compared, 0);
    }
}

TEST(QuadConditions, AtkinPrimeFallsToConditionTwo) {
  // 103 = -1 (mod 13): the Q^2 relation holds, the Kloosterman condition does not
  const auto one = check_quad_condition_one(13, -1, 103, 24 * 4'000'000);
  EXPECT_FALSE(one.falsified());
  const auto two = check_quad_condition_two(13, -1, 103, 5000);
  ASSERT_TRUE(two.falsified());
  EXPECT_EQ(two.witness, 41);
}
