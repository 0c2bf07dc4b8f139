#pragma once

// Square-class bookkeeping for candidate congruences p(m n + beta) = 0 (mod ell).

#include <cstdint>
#include <vector>

namespace partcong::congruence {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct CongruenceCandidate {
  u64 ell = 0;
  u64 Q = 0;
  i64 beta = 0;
  int delta = 0;    // ((1 - 24 beta)/ell), 0 or -1
  int epsilon = 0;  // ((24 beta - 1)/Q)
};

/// Residues beta' mod m with 24 beta' - 1 = a^2 (24 beta - 1) for a unit a.
/// Requires gcd(m, 6) = 1 and m <= 10^7. Sorted ascending.
std::vector<u64> square_class_set(u64 m, i64 beta);

/// The t in [0, ell) with d^2 (24 t - 1) = 24 beta - 1 (mod ell).
u64 t_d_beta(i64 d, i64 beta, u64 ell);

/// d^(-1) (-12/d) ((24 beta0 - 1)/d) mod ell.
u64 lambda_d(u64 d, i64 beta0, u64 ell);

/// 24^(-1) mod ell.
u64 beta_ell(u64 ell);

struct Classification {
  bool impossible = false;  // ((1 - 24 beta)/ell) = +1: never supports a congruence
  CongruenceCandidate cand;
};
Classification classify(u64 ell, u64 Q, i64 beta);

struct HoldsResult {
  bool holds = true;
  i64 witness = -1;  // first n with p(m n + beta) != 0 (mod ell)
  i64 checked_to = 0;
};
/// Scans n = 0..n_max. Throws TableShortfall past the table ceiling.
HoldsResult congruence_holds(u64 ell, u64 m, i64 beta, i64 n_max);

}  // namespace partcong::congruence
