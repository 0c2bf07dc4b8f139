#include "partcong/congruence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/partition.hpp"

namespace partcong::congruence {

std::vector<u64> square_class_set(u64 m, i64 beta) {
  if (m == 0 || nt::gcd(m, 6) != 1) throw std::invalid_argument("square_class_set: m must be coprime to 6");
  if (m > 10'000'000) throw ResourceLimit("square_class_set: m = " + std::to_string(m) + " exceeds 10^7");
  if (m == 1) return {0};
  const u64 inv24 = nt::mod_inv(24, m);
  const u64 base = nt::reduce(24 * beta - 1, m);
  std::vector<char> seen(m, 0);
  for (u64 a = 1; a < m; ++a) {
    if (nt::gcd(a, m) != 1) continue;
    const u64 v = nt::mul_mod(nt::mul_mod(a, a, m), base, m);
    seen[nt::mul_mod(inv24, (v + 1) % m, m)] = 1;
  }
  std::vector<u64> out;
  for (u64 b = 0; b < m; ++b)
    if (seen[b]) out.push_back(b);
  return out;
}

u64 t_d_beta(i64 d, i64 beta, u64 ell) {
  if (nt::reduce(d, ell) == 0) throw std::invalid_argument("t_d_beta: ell divides d");
  const u64 rhs = nt::mul_mod(nt::mod_pow(d, -2, ell), nt::reduce(24 * beta - 1, ell), ell);
  return nt::mul_mod(nt::mod_inv(24, ell), (rhs + 1) % ell, ell);
}

u64 lambda_d(u64 d, i64 beta0, u64 ell) {
  if (d == 0 || (d & 1) == 0) throw std::invalid_argument("lambda_d: d must be odd");
  if (nt::gcd(d, 6 * ell) != 1) throw std::invalid_argument("lambda_d: d must be coprime to 6 ell");
  const auto D = static_cast<nt::i64>(d);
  const int s = nt::jacobi(-12, D) * nt::jacobi(24 * beta0 - 1, D);
  const u64 inv = nt::mod_inv(D, ell);
  if (s == 0) return 0;
  return s > 0 ? inv : (ell - inv) % ell;
}

u64 beta_ell(u64 ell) {
  if (ell < 5) throw std::invalid_argument("beta_ell: ell must be >= 5");
  return nt::mod_inv(24, ell);
}

Classification classify(u64 ell, u64 Q, i64 beta) {
  if (ell < 5 || Q < 5 || ell == Q || !nt::is_prime(ell) || !nt::is_prime(Q))
    throw std::invalid_argument("classify: ell and Q must be distinct primes >= 5");
  Classification out;
  auto& c = out.cand;
  c.ell = ell;
  c.Q = Q;
  c.beta = beta;
  c.delta = nt::jacobi(1 - 24 * beta, static_cast<nt::i64>(ell));
  c.epsilon = nt::jacobi(24 * beta - 1, static_cast<nt::i64>(Q));
  out.impossible = c.delta == 1;
  return out;
}

HoldsResult congruence_holds(u64 ell, u64 m, i64 beta, i64 n_max) {
  if (m == 0) throw std::invalid_argument("congruence_holds: m must be positive");
  HoldsResult r;
  r.checked_to = n_max;
  if (n_max < 0) return r;
  const i64 top = static_cast<i64>(m) * n_max + beta;
  const auto table = partition::table_for(ell, static_cast<u64>(std::max<i64>(top, 0)) + 1);
  for (i64 n = 0; n <= n_max; ++n) {
    if (table->at(static_cast<i64>(m) * n + beta) != 0) {
      r.holds = false;
      r.witness = n;
      r.checked_to = n;
      return r;
    }
  }
  return r;
}

}  // namespace partcong::congruence
