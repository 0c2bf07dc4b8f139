#include "partcong/verifier.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "partcong/congruence.hpp"
#include "partcong/cyclotomic.hpp"
#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/partition.hpp"
#include "partcong/qseries.hpp"
#include "partcong/sieve.hpp"

namespace partcong::verify {

namespace {

using partition::PartitionTable;

void require_pair(u64 ell, u64 Q, const char* who) {
  if (ell < 5 || !nt::is_prime(ell)) throw std::invalid_argument(std::string(who) + ": ell must be a prime >= 5");
  if (Q < 5 || !nt::is_prime(Q)) throw std::invalid_argument(std::string(who) + ": Q must be a prime >= 5");
  if (Q == ell) throw std::invalid_argument(std::string(who) + ": Q must differ from ell");
}

void require_delta(int delta) {
  if (delta != 0 && delta != -1) throw std::invalid_argument("delta must be 0 or -1");
}

u64 signed_residue(int s, u64 ell) { return s > 0 ? 1 : (s < 0 ? ell - 1 : 0); }

// Partition lookups mod ell that grow the shared table only as far as asked.
class LazyTable {
  using u32 = std::uint32_t;

 public:
  explicit LazyTable(u64 ell) : ell_(ell) {}
  u32 operator()(i64 n) {
    if (n < 0) return 0;
    if (!t_ || static_cast<u64>(n) >= t_->limit()) t_ = partition::table_for(ell_, static_cast<u64>(n) + 1);
    return t_->values[static_cast<std::size_t>(n)];
  }
  // a_{ell,delta}(m): p((m+1)/24) when 24 | m+1 and (-m/ell) = delta
  u32 a(i64 m, int delta) {
    if (m < -1 || (m + 1) % 24 != 0) return 0;
    if (nt::jacobi(-m, static_cast<i64>(ell_)) != delta) return 0;
    return (*this)((m + 1) / 24);
  }

 private:
  u64 ell_;
  std::shared_ptr<const PartitionTable> t_;
};

FalsificationResult base(Condition c, u64 ell, int delta, u64 Q) {
  FalsificationResult r;
  r.condition = c;
  r.ell = ell;
  r.delta = delta;
  r.Q = Q;
  return r;
}

FalsificationResult trivially(FalsificationResult r) {
  r.status = Status::TriviallyConsistent;
  r.reason = "f_{" + std::to_string(r.ell) + ",0} vanishes mod " + std::to_string(r.ell) +
             " by Ramanujan's congruence";
  return r;
}

}  // namespace

const char* to_string(Condition c) {
  switch (c) {
    case Condition::HeckeIdentity: return "hecke_identity";
    case Condition::UQVQ: return "uqvq";
    case Condition::SquarefreeAnnihilator: return "squarefree_annihilator";
    case Condition::QuadConditionOne: return "quad_condition_one";
    case Condition::QuadConditionTwo: return "quad_condition_two";
    case Condition::ShimuraCommutation: return "shimura_commutation";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Falsified: return "falsified";
    case Status::ConsistentUpTo: return "consistent_up_to";
    case Status::TriviallyConsistent: return "trivially_consistent";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::RuledOut: return "ruled_out";
    case Verdict::Unresolved: return "unresolved";
    case Verdict::Ramanujan: return "ramanujan";
  }
  return "?";
}

bool zero_form(u64 ell, int delta) { return delta == 0 && (ell == 5 || ell == 7 || ell == 11); }

FalsificationResult check_hecke_identity(u64 ell, int delta, u64 Q, i64 n_limit) {
  require_pair(ell, Q, "check_hecke_identity");
  require_delta(delta);
  auto r = base(Condition::HeckeIdentity, ell, delta, Q);
  if (zero_form(ell, delta)) return trivially(r);
  const auto q = static_cast<i64>(Q);
  const auto L = static_cast<i64>(ell);
  const u64 qi2 = nt::mod_pow(q, -2, ell);
  const u64 qi3 = nt::mod_pow(q, -3, ell);
  LazyTable p(ell);
  i64 last = -1;
  for (i64 n = 23; n <= n_limit; n += 24) {
    if (nt::jacobi(-n, L) != delta || n % q == 0) continue;
    const i64 big = (q * q * n + 1) / 24;
    if (static_cast<u64>(big) >= partition::table_ceiling())
      throw TableShortfall("hecke identity (ell=" + std::to_string(ell) + ", Q=" + std::to_string(Q) +
                           "): consistent through n=" + std::to_string(last) + ", n=" + std::to_string(n) +
                           " needs p(" + std::to_string(big) + ")");
    u64 v = p(big);
    v = nt::add_mod(v, nt::mul_mod(nt::mul_mod(qi2, signed_residue(nt::jacobi(-12 * n, q), ell), ell),
                                   p((n + 1) / 24), ell), ell);
    if (n % (q * q) == 0) v = nt::add_mod(v, nt::mul_mod(qi3, p((n / (q * q) + 1) / 24), ell), ell);
    last = n;
    if (v != 0) {
      r.status = Status::Falsified;
      r.witness = n;
      return r;
    }
  }
  r.bound = n_limit;
  return r;
}

FalsificationResult check_uqvq(u64 ell, int delta, u64 Q, int epsilon, i64 N) {
  require_pair(ell, Q, "check_uqvq");
  require_delta(delta);
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("check_uqvq: epsilon must be +1 or -1");
  auto r = base(Condition::UQVQ, ell, delta, Q);
  r.epsilon = epsilon;
  if (zero_form(ell, delta)) return trivially(r);
  const auto q = static_cast<i64>(Q);
  const auto f = qseries::f_ell_delta(ell, delta, q * N);
  const auto u = qseries::u_op(f, Q);
  // -eps (-12/Q) Q^-1
  const int s = -epsilon * nt::jacobi(-12, q);
  const u64 c = nt::mul_mod(signed_residue(s, ell), nt::mod_inv(q, ell), ell);
  const auto v = qseries::scale(qseries::v_op(f, Q, N), static_cast<i64>(c));
  const auto mismatch = qseries::series_equal_mod(u, v, N);
  if (mismatch) {
    r.status = Status::Falsified;
    r.witness = *mismatch;
  } else {
    r.bound = N;
  }
  return r;
}

FalsificationResult check_squarefree_annihilator(u64 ell, int delta, const std::vector<u64>& Qs, i64 beta0,
                                                 i64 N) {
  require_delta(delta);
  if (ell < 5 || !nt::is_prime(ell)) throw std::invalid_argument("annihilator: ell must be a prime >= 5");
  const auto L = static_cast<i64>(ell);
  if (nt::jacobi(1 - 24 * beta0, L) != delta)
    throw std::invalid_argument("annihilator: ((1 - 24 beta0)/ell) does not match delta");
  i64 prod = 1;
  for (std::size_t i = 0; i < Qs.size(); ++i) {
    require_pair(ell, Qs[i], "annihilator");
    if (std::count(Qs.begin(), Qs.end(), Qs[i]) != 1) throw std::invalid_argument("annihilator: repeated prime");
    if ((24 * beta0 - 1) % static_cast<i64>(Qs[i]) == 0)
      throw std::invalid_argument("annihilator: Q divides 24 beta0 - 1");
    prod *= static_cast<i64>(Qs[i]);
  }
  auto r = base(Condition::SquarefreeAnnihilator, ell, delta, Qs.empty() ? 0 : Qs.front());
  r.Qs = Qs;
  qseries::EtaSeries g = qseries::f_ell_delta(ell, delta, N * prod);
  for (u64 Q : Qs) {
    const u64 lam = congruence::lambda_d(Q, beta0, ell);
    const auto u = qseries::u_op(g, Q);
    const auto v = qseries::v_op(g, Q, u.precision);
    g = qseries::add(u, qseries::scale(v, static_cast<i64>(lam)));
  }
  if (g.precision < 24)
    throw PrecisionShortfall("annihilator: surviving precision " + std::to_string(g.precision) + " < 24");
  if (const auto n = g.first_nonzero()) {
    r.status = Status::Falsified;
    r.witness = *n;
  } else {
    r.bound = g.precision;
  }
  return r;
}

FalsificationResult check_quad_condition_one(u64 ell, int delta, u64 Q, i64 N) {
  require_pair(ell, Q, "check_quad_condition_one");
  require_delta(delta);
  auto r = base(Condition::QuadConditionOne, ell, delta, Q);
  if (zero_form(ell, delta)) return trivially(r);
  const auto q = static_cast<i64>(Q);
  const auto L = static_cast<i64>(ell);
  const u64 qi1 = nt::mod_inv(q, ell);
  const u64 qi2 = nt::mod_pow(q, -2, ell);
  const int chi12 = nt::jacobi(-12, q);
  LazyTable p(ell);
  i64 last = -2;
  for (i64 n = -1; q * q * n < N; n += 24) {
    const i64 m = q * q * n;
    if ((m + 1) / 24 >= static_cast<i64>(partition::table_ceiling()))
      throw TableShortfall("quad condition one (ell=" + std::to_string(ell) + ", Q=" + std::to_string(Q) +
                           "): consistent through n=" + std::to_string(last));
    u64 v = p.a(m, delta);
    const int sym = chi12 * nt::jacobi(n, q);
    v = nt::sub_mod(v, nt::mul_mod(nt::mul_mod(qi1, signed_residue(sym, ell), ell), p.a(n, delta), ell), ell);
    if (n % (q * q) == 0) v = nt::sub_mod(v, nt::mul_mod(qi2, p.a(n / (q * q), delta), ell), ell);
    last = n;
    if (v != 0) {
      r.status = Status::Falsified;
      r.witness = n;
      // the computational shorthand uses (-12 ell/Q) in place of (-12 n/Q)
      const int alt = nt::jacobi(-12 * L, q);
      if (alt != nt::jacobi(-12 * n, q))
        r.notes.push_back("at n=" + std::to_string(n) + ": (-12n/Q)=" + std::to_string(nt::jacobi(-12 * n, q)) +
                          " but (-12 ell/Q)=" + std::to_string(alt));
      return r;
    }
  }
  r.bound = N;
  return r;
}

FalsificationResult check_quad_condition_two(u64 ell, int delta, u64 Q, i64 n_limit) {
  require_pair(ell, Q, "check_quad_condition_two");
  require_delta(delta);
  auto r = base(Condition::QuadConditionTwo, ell, delta, Q);
  if (zero_form(ell, delta)) return trivially(r);
  const auto q = static_cast<i64>(Q);
  const auto L = static_cast<i64>(ell);
  // (24^2 ell^4)^-1 mod Q
  const u64 l2 = nt::mul_mod(ell % Q, ell % Q, Q);
  const u64 binv = nt::mod_inv(static_cast<i64>(nt::mul_mod(576 % Q, nt::mul_mod(l2, l2, Q), Q)), Q);
  i64 nonres = 2;
  while (nt::jacobi(nonres, q) != -1) ++nonres;
  const i64 classes[2] = {1, nonres};
  std::map<i64, bool> nonvanishing;  // keyed by square-class representative
  const auto verdict = [&](i64 rep) {
    auto it = nonvanishing.find(rep);
    if (it == nonvanishing.end()) {
      const auto v = cyclo::vanishes_mod_ell(cyclo::kloosterman(1, rep, Q), ell);
      it = nonvanishing.emplace(rep, v == cyclo::Vanishing::NonvanishingEverywhere).first;
    }
    return it->second;
  };
  i64 wit[2] = {-1, -1};
  LazyTable p(ell);
  // a(Qn) lives on Qn = 23 (mod 24), i.e. n = -Q (mod 24)
  const i64 n0 = static_cast<i64>(nt::reduce(-q, 24));
  for (i64 n = n0; n <= n_limit && (wit[0] < 0 || wit[1] < 0); n += 24) {
    if (n % q == 0) continue;
    const i64 m = q * n;
    if (nt::jacobi(-m, L) != delta) continue;
    if (p((m + 1) / 24) == 0) continue;
    const i64 b = static_cast<i64>(nt::mul_mod(binv, nt::reduce(n, Q), Q));
    for (int k = 0; k < 2; ++k) {
      if (wit[k] >= 0) continue;
      if (verdict(cyclo::kloosterman_class_rep(classes[k], b, Q).c)) wit[k] = n;
    }
  }
  r.witnesses = {wit[0], wit[1]};
  if (wit[0] >= 0 && wit[1] >= 0) {
    r.status = Status::Falsified;
    r.witness = std::max(wit[0], wit[1]);
  } else {
    r.bound = n_limit;
    for (int k = 0; k < 2; ++k)
      if (wit[k] < 0) r.notes.push_back("no witness for square class of " + std::to_string(classes[k]));
  }
  return r;
}

BWitness b_witness(u64 ell, int delta, u64 Q, int epsilon, std::size_t max_count) {
  BWitness out;
  const u64 scan = std::min(sieve::default_scan_limit(ell, max_count), partition::table_ceiling());
  for (const auto& w : sieve::build_B(ell, delta, max_count, scan)) {
    if (nt::jacobi(static_cast<i64>(w.n % Q), static_cast<i64>(Q)) == epsilon) {
      out.found = true;
      out.n = w.n;
      out.beta = w.beta;
      return out;
    }
  }
  return out;
}

QuadReport rule_out_quadratic(u64 ell, u64 Q, const QuadBudget& budget) {
  require_pair(ell, Q, "rule_out_quadratic");
  QuadReport rep;
  rep.ell = ell;
  rep.Q = Q;
  const u64 ceil = partition::table_ceiling();
  i64 uqvq_N = budget.uqvq_N;
  if (uqvq_N <= 0) uqvq_N = std::min<i64>(24000, static_cast<i64>(24 * ceil / Q) - 24);
  i64 one_N = budget.cond_one_N;
  if (one_N <= 0) one_N = static_cast<i64>(24 * ceil);

  for (int di = 0; di < 2; ++di) {
    const int delta = di == 0 ? 0 : -1;
    DeltaReport& d = rep.per_delta[di];
    d.delta = delta;
    if (zero_form(ell, delta)) {
      d.case1 = d.case2 = d.case3 = {Verdict::Ramanujan, "Ramanujan congruence", {}};
      d.verdict = Verdict::Ramanujan;
      continue;
    }
    d.case1 = {Verdict::RuledOut, "only the Ramanujan congruences have Q^2 | 24 beta - 1", {}};

    // (Q, 24 beta - 1) = 1: a congruence mod ell Q with some eps
    bool both = true;
    std::string how;
    for (int eps : {1, -1}) {
      auto c = check_uqvq(ell, delta, Q, eps, uqvq_N);
      const bool ok = c.falsified();
      d.case2.checks.push_back(std::move(c));
      if (ok) {
        how += (how.empty() ? "" : "; ") + std::string("uqvq eps=") + std::to_string(eps);
        continue;
      }
      const auto bw = b_witness(ell, delta, Q, eps, budget.b_count);
      if (bw.found) {
        how += (how.empty() ? "" : "; ") + std::string("B-witness n=") + std::to_string(bw.n) +
               " eps=" + std::to_string(eps);
      } else {
        both = false;
      }
    }
    d.case2.verdict = both ? Verdict::RuledOut : Verdict::Unresolved;
    d.case2.method = how;

    // Q || 24 beta - 1: either condition failing excludes the congruence
    FalsificationResult one;
    try {
      one = check_quad_condition_one(ell, delta, Q, one_N);
    } catch (const TableShortfall& e) {
      one = base(Condition::QuadConditionOne, ell, delta, Q);
      one.notes.push_back(e.what());
    }
    const bool one_ok = one.falsified();
    d.case3.checks.push_back(one);
    if (one_ok) {
      d.case3 = {Verdict::RuledOut, "quad condition one at n=" + std::to_string(one.witness), {one}};
    } else {
      auto two = check_quad_condition_two(ell, delta, Q, budget.cond_two_n);
      const bool two_ok = two.falsified();
      d.case3.checks.push_back(two);
      if (two_ok) {
        d.case3.verdict = Verdict::RuledOut;
        d.case3.method = "quad condition two at n=" + std::to_string(two.witnesses[0]) + "," +
                         std::to_string(two.witnesses[1]);
      } else {
        d.case3.verdict = Verdict::Unresolved;
      }
    }

    const bool all = d.case2.verdict == Verdict::RuledOut && d.case3.verdict == Verdict::RuledOut;
    d.verdict = all ? Verdict::RuledOut : Verdict::Unresolved;
    if (!all) {
      if (d.case2.verdict != Verdict::RuledOut) d.surviving = "uqvq";
      if (d.case3.verdict != Verdict::RuledOut)
        d.surviving += std::string(d.surviving.empty() ? "" : ",") + "quad_condition_one,quad_condition_two";
    }
  }
  return rep;
}

CommutationResult shimura_commutation_test(u64 ell, int delta, u64 Q, u64 t, i64 N) {
  require_pair(ell, Q, "shimura_commutation_test");
  require_delta(delta);
  const auto f = qseries::f_ell_delta(ell, delta, N);
  const auto lhs = qseries::shimura_lift(qseries::hecke_TQ2(f, Q), t);
  const auto rhs = qseries::hecke_TQ(qseries::shimura_lift(f, t), Q);
  CommutationResult out;
  out.compared = std::min(lhs.precision, rhs.precision);
  if (out.compared <= 1)
    throw PrecisionShortfall("shimura_commutation_test: no common coefficients at precision " + std::to_string(N));
  bool zero = true;
  for (i64 n = 0; n < out.compared; ++n) {
    const auto a = lhs.coeff(n), b = rhs.coeff(n);
    if (a != 0 || b != 0) zero = false;
    if (a != b) {
      out.pass = false;
      out.first_mismatch = n;
      break;
    }
  }
  out.both_zero = zero && out.pass;
  return out;
}

}  // namespace partcong::verify
