#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "partcong/nt_kernel.hpp"
#include "partcong/oracle.hpp"
#include "partcong/sieve.hpp"

using namespace partcong;
using namespace partcong::sieve;

namespace {

std::vector<u64> ns_of(const std::vector<Witness>& N) {
  std::vector<u64> ns;
  for (const auto& w : N) ns.push_back(w.n);
  return ns;
}

}  // namespace

TEST(Witnesses, RamanujanPrimeHasNone) {
  EXPECT_TRUE(build_B(5, 0, 10, 5000).empty());
  EXPECT_TRUE(build_B(7, 0, 10, 5000).empty());
}

TEST(Witnesses, FirstForThirteen) {
  const auto B = build_B(13, 0, 5, default_scan_limit(13, 5));
  ASSERT_FALSE(B.empty());
  EXPECT_EQ(B.front(), (Witness{11, 6}));
}

TEST(Witnesses, MatchNaiveRecomputation) {
  for (u64 ell : {13ull, 17ull, 31ull})
    for (int delta : {0, -1}) {
      const auto B = build_B(ell, delta, 60, 20000);
      EXPECT_EQ(ns_of(B), oracle::naive_B(ell, delta, 60, 20000)) << ell << " " << delta;
    }
}

TEST(Residues, FiveExcludingResidues) {
  const auto r = allowed_residues(5, 1);
  EXPECT_EQ(r.modulus, 5u);
  EXPECT_EQ(r.classes, (std::vector<u64>{0, 2, 3}));
}

TEST(Residues, PeriodForThreeModFour) {
  EXPECT_EQ(allowed_residues(3, -1).modulus, 12u);
  EXPECT_EQ(allowed_residues(7, 1).modulus, 28u);
  EXPECT_THROW(allowed_residues(2, 1), std::invalid_argument);
}

TEST(Residues, AgreeWithLegendreAndCoverEveryPrime) {
  for (u64 p : {3ull, 5ull, 7ull, 13ull, 23ull})
    for (int eps : {1, -1}) {
      const auto r = allowed_residues(p, eps);
      const auto other = allowed_residues(p, -eps);
      for (u64 Q = 5; Q < 3000; ++Q) {
        if (!oracle::trial_prime(Q) || Q == p) continue;
        const bool in = std::binary_search(r.classes.begin(), r.classes.end(), Q % r.modulus);
        ASSERT_EQ(in, oracle::euler_legendre(static_cast<i64>(p), Q) != eps) << p << " " << eps << " " << Q;
        const bool in_other = std::binary_search(other.classes.begin(), other.classes.end(), Q % other.modulus);
        ASSERT_TRUE(in || in_other);
      }
    }
}

TEST(Run, EmptyWitnessSetKeepsEverything) {
  SieveConfig cfg;
  cfg.ell = 5;
  cfg.delta = 0;
  cfg.Q_max = 1000;
  const auto rep = run_sieve(cfg);
  EXPECT_TRUE(rep.all_primes_survive);
}

TEST(Run, TinyRangeHasNoSurvivors) {
  SieveConfig cfg;
  cfg.Q_max = 4;
  const auto rep = run_sieve(cfg);
  EXPECT_TRUE(rep.survivors.empty());
  EXPECT_EQ(rep.out_of_domain, (std::vector<u64>{2, 3}));
}

TEST(Run, ThirteenLeavesOnlyExpectedPrimes) {
  for (int delta : {0, -1}) {
    SieveConfig cfg;
    cfg.ell = 13;
    cfg.delta = delta;
    cfg.Q_max = 100'000;
    const auto rep = run_sieve(cfg);
    EXPECT_TRUE(unexpected_survivors(rep).empty()) << delta;
    for (u64 Q : rep.survivors) EXPECT_TRUE(Q == 5 || Q == 7 || Q == 11 || Q == 13) << Q;
    for (const auto& [Q, w] : rep.witnesses) {
      EXPECT_EQ(nt::jacobi(static_cast<i64>(w.first), static_cast<i64>(Q)), 1);
      EXPECT_EQ(nt::jacobi(static_cast<i64>(w.second), static_cast<i64>(Q)), -1);
    }
  }
}

TEST(Run, MatchesPrimeByPrimeOracle) {
  for (std::size_t count : {3u, 6u, 40u}) {
    SieveConfig cfg;
    cfg.ell = 17;
    cfg.delta = -1;
    cfg.Q_max = 60'000;
    cfg.witness_count = count;
    cfg.direct_below = 0;
    const auto rep = run_sieve(cfg);
    EXPECT_EQ(rep.survivors, oracle::naive_survivors(ns_of(rep.N), cfg.Q_max)) << count;
  }
}

TEST(Refine, DropsFalseSurvivors) {
  SieveConfig cfg;
  cfg.ell = 13;
  cfg.delta = 0;
  cfg.Q_max = 20'000;
  cfg.witness_count = 3;
  const auto coarse = run_sieve(cfg);
  ASSERT_GT(coarse.survivors.size(), 4u);
  const auto fine = refine_survivors(coarse, 13, 0, 200);
  EXPECT_LT(fine.survivors.size(), coarse.survivors.size());
  for (u64 Q : fine.survivors) EXPECT_TRUE(std::binary_search(coarse.survivors.begin(), coarse.survivors.end(), Q));
  EXPECT_TRUE(unexpected_survivors(fine).empty());
}

TEST(Checkpoint, ResumeGivesSameAnswer) {
  const auto path = std::filesystem::temp_directory_path() / "partcong_sieve_ckpt_test.jsonl";
  std::filesystem::remove(path);
  SieveConfig cfg;
  cfg.ell = 19;
  cfg.delta = 0;
  cfg.Q_max = 200'000;
  cfg.checkpoint = path.string();
  const auto first = run_sieve(cfg);
  EXPECT_EQ(first.resumed_units, 0u);
  const auto second = run_sieve(cfg);
  EXPECT_GT(second.resumed_units, 0u);
  EXPECT_EQ(first.survivors, second.survivors);
  std::filesystem::remove(path);
}

TEST(Survives, WitnessPair) {
  const std::vector<Witness> N = {{2, 0}, {3, 0}};
  std::pair<u64, u64> w;
  // mod 23: (2/23) = 1, (3/23) = 1, so eps = -1 survives
  EXPECT_TRUE(survives(23, N, &w));
  // mod 5: (2/5) = -1, (3/5) = -1; eps = +1 survives
  EXPECT_TRUE(survives(5, N, &w));
  // mod 13: (2/13) = -1, (3/13) = 1
  EXPECT_FALSE(survives(13, N, &w));
  EXPECT_EQ(w, (std::pair<u64, u64>{3, 2}));
}
