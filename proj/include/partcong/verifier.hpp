#pragma once

// Finite falsification of the necessary conditions for partition congruences.
//
// Every check scans in increasing n and stops at the first violation. A
// Falsified result carries that n, which replays to a nonzero residue.

#include <cstdint>
#include <string>
#include <vector>

namespace partcong::verify {

using i64 = std::int64_t;
using u64 = std::uint64_t;

enum class Condition {
  HeckeIdentity,          // p((Q^2 n+1)/24) + Q^-2 (-12n/Q) p((n+1)/24) + Q^-3 p((n/Q^2+1)/24)
  UQVQ,                   // f|U_Q = -eps (-12/Q) Q^-1 f|V_Q
  SquarefreeAnnihilator,  // f | prod (U_Qi + lambda_Qi V_Qi) = 0
  QuadConditionOne,       // f|U_Q^2 = (-12/Q) Q^-1 f (x) chi_Q + Q^-2 f|V_Q^2
  QuadConditionTwo,       // sum K(.., n, Q) a(Qn) q^(n/24) = 0
  ShimuraCommutation,
};
const char* to_string(Condition c);

enum class Status { Falsified, ConsistentUpTo, TriviallyConsistent };
const char* to_string(Status s);

struct FalsificationResult {
  Condition condition = Condition::HeckeIdentity;
  Status status = Status::ConsistentUpTo;
  i64 witness = -1;              // Falsified: the first violating n
  std::vector<i64> witnesses;    // per square class for QuadConditionTwo
  i64 bound = 0;                 // ConsistentUpTo: scanned range
  std::string reason;            // TriviallyConsistent
  u64 ell = 0;
  u64 Q = 0;
  std::vector<u64> Qs;
  int delta = 0;
  int epsilon = 0;
  std::vector<std::string> notes;

  bool falsified() const { return status == Status::Falsified; }
};

/// True for (ell, delta) in {(5,0), (7,0), (11,0)}: f_{ell,delta} = 0 (mod ell).
bool zero_form(u64 ell, int delta);

FalsificationResult check_hecke_identity(u64 ell, int delta, u64 Q, i64 n_limit);

/// Compares f|U_Q with -eps (-12/Q) Q^-1 f|V_Q for exponents below N.
FalsificationResult check_uqvq(u64 ell, int delta, u64 Q, int epsilon, i64 N);

/// Applies (U_Qi + lambda_Qi V_Qi) in order to f_{ell,delta} built to precision
/// N * prod Qi and tests the result for vanishing below N.
FalsificationResult check_squarefree_annihilator(u64 ell, int delta, const std::vector<u64>& Qs, i64 beta0,
                                                 i64 N);

/// Coefficientwise test of the Q^2 relation over all n < N / Q^2.
FalsificationResult check_quad_condition_one(u64 ell, int delta, u64 Q, i64 N);

/// Both square classes of (24 beta - 1)/Q, n scanned up to n_limit.
FalsificationResult check_quad_condition_two(u64 ell, int delta, u64 Q, i64 n_limit);

/// Witness search over the set B: some n in B with (n/Q) = eps excludes eps.
struct BWitness {
  bool found = false;
  u64 n = 0;
  i64 beta = 0;
};
BWitness b_witness(u64 ell, int delta, u64 Q, int epsilon, std::size_t max_count);

struct QuadBudget {
  i64 uqvq_N = 0;         // 0: as large as the table ceiling allows, capped at 24000
  i64 cond_one_N = 0;     // 0: 24 * table ceiling
  i64 cond_two_n = 5000;
  std::size_t b_count = 400;
};

enum class Verdict { RuledOut, Unresolved, Ramanujan };
const char* to_string(Verdict v);

struct CaseReport {
  Verdict verdict = Verdict::Unresolved;
  std::string method;
  std::vector<FalsificationResult> checks;
};

struct DeltaReport {
  int delta = 0;
  CaseReport case1;  // Q^2 | 24 beta - 1
  CaseReport case2;  // (Q, 24 beta - 1) = 1
  CaseReport case3;  // Q || 24 beta - 1
  Verdict verdict = Verdict::Unresolved;
  std::string surviving;  // names the unfalsified condition when unresolved
};

struct QuadReport {
  u64 ell = 0;
  u64 Q = 0;
  DeltaReport per_delta[2];  // delta = 0, -1
  bool ruled_out(int delta) const { return per_delta[delta == 0 ? 0 : 1].verdict == Verdict::RuledOut; }
};

QuadReport rule_out_quadratic(u64 ell, u64 Q, const QuadBudget& budget = {});

struct CommutationResult {
  bool pass = true;
  i64 first_mismatch = -1;
  i64 compared = 0;   // number of integral coefficients compared
  bool both_zero = false;
};
/// Sh_t(f|T_{Q^2}) against (Sh_t f)|T_Q for f = f_{ell,delta} of precision N.
CommutationResult shimura_commutation_test(u64 ell, int delta, u64 Q, u64 t, i64 N);

}  // namespace partcong::verify
