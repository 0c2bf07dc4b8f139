#include "partcong/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"

namespace partcong::cyclo {

namespace {

void require_c(u64 c) {
  if (c == 0) throw std::invalid_argument("cyclotomic modulus must be positive");
  if (c > (u64{1} << 24)) throw ResourceLimit("cyclotomic modulus too large for a dense vector");
}

void require_odd(u64 c, const char* who) {
  require_c(c);
  if ((c & 1) == 0) throw std::invalid_argument(std::string(who) + ": modulus must be odd");
}

std::size_t idx(i64 e, u64 c) { return static_cast<std::size_t>(nt::reduce(e, c)); }

// Exact division of integer polynomials by a monic divisor (lowest degree first).
std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  std::vector<i64> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const i64 coef = num[i];
    q[i - dn] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= coef * den[j];
  }
  return q;
}

// Remainder modulo a monic polynomial over Z.
std::vector<i64> poly_rem(std::vector<i64> a, const std::vector<i64>& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const i64 coef = a[i];
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= coef * m[j];
  }
  a.resize(dm);
  return a;
}

using Fp = std::vector<u64>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p; b nonzero with trimmed leading coefficient.
Fp fp_rem(Fp a, const Fp& b, u64 p) {
  trim(a);
  const u64 inv = nt::mod_inv(static_cast<nt::i64>(b.back()), p);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const u64 f = nt::mul_mod(a.back(), inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j)
      a[shift + j] = nt::sub_mod(a[shift + j], nt::mul_mod(f, b[j], p), p);
    trim(a);
  }
  return a;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

CycloVector CycloVector::zero(u64 c) {
  require_c(c);
  return CycloVector{c, std::vector<i64>(c, 0)};
}

CycloVector CycloVector::unit(u64 c) { return monomial(c, 0); }

CycloVector CycloVector::monomial(u64 c, i64 e) {
  CycloVector v = zero(c);
  v.counts[idx(e, c)] = 1;
  return v;
}

CycloVector CycloVector::constant(u64 c, i64 k) {
  CycloVector v = zero(c);
  v.counts[0] = k;
  return v;
}

CycloVector CycloVector::operator+(const CycloVector& o) const {
  if (c != o.c) throw std::invalid_argument("cyclotomic moduli differ");
  CycloVector r = *this;
  for (std::size_t i = 0; i < c; ++i) r.counts[i] += o.counts[i];
  return r;
}

CycloVector CycloVector::operator-(const CycloVector& o) const { return *this + o * -1; }

CycloVector CycloVector::operator*(i64 k) const {
  CycloVector r = *this;
  for (auto& x : r.counts) x *= k;
  return r;
}

i64 CycloVector::total() const { return std::accumulate(counts.begin(), counts.end(), i64{0}); }

CycloVector kloosterman(i64 a, i64 b, u64 c) {
  CycloVector v = CycloVector::zero(c);
  if (c == 1) {
    v.counts[0] = 1;
    return v;
  }
  const u64 A = nt::reduce(a, c), B = nt::reduce(b, c);
  for (u64 n = 1; n < c; ++n) {
    if (nt::gcd(n, c) != 1) continue;
    const u64 nb = nt::mod_inv(static_cast<i64>(n), c);
    v.counts[(nt::mul_mod(A, n, c) + nt::mul_mod(B, nb, c)) % c] += 1;
  }
  return v;
}

CycloVector salie(i64 a, i64 b, u64 c) {
  require_odd(c, "salie");
  CycloVector v = CycloVector::zero(c);
  if (c == 1) {
    v.counts[0] = 1;
    return v;
  }
  const u64 A = nt::reduce(a, c), B = nt::reduce(b, c);
  for (u64 n = 1; n < c; ++n) {
    if (nt::gcd(n, c) != 1) continue;
    const int s = nt::jacobi(static_cast<i64>(n), static_cast<i64>(c));
    const u64 nb = nt::mod_inv(static_cast<i64>(n), c);
    v.counts[(nt::mul_mod(A, n, c) + nt::mul_mod(B, nb, c)) % c] += s;
  }
  return v;
}

CycloVector gauss(i64 a, u64 d) {
  require_odd(d, "gauss");
  CycloVector v = CycloVector::zero(d);
  const u64 A = nt::reduce(a, d);
  for (u64 n = 0; n < d; ++n)
    v.counts[nt::mul_mod(A, n, d)] += nt::jacobi(static_cast<i64>(n), static_cast<i64>(d));
  return v;
}

CycloVector hyper_kloosterman(i64 b, i64 a, u64 Q) {
  require_c(Q);
  CycloVector v = CycloVector::zero(Q);
  const u64 A = nt::reduce(a, Q), B = nt::reduce(b, Q);
  for (u64 x1 = 0; x1 < Q; ++x1) {
    for (u64 x2 = 0; x2 < Q; ++x2) {
      if (nt::mul_mod(x1, x2, Q) != A) continue;
      v.counts[nt::mul_mod(B, (x1 + x2) % Q, Q)] += 1;
    }
  }
  return v;
}

CycloVector t_sum(i64 n, u64 d, u64 ell, u64 Q, i64 beta) {
  if (d == 0 || Q % d != 0) throw std::invalid_argument("t_sum: d must divide Q");
  const u64 c = Q / d;
  require_odd(c, "t_sum");
  if (c == 1) return CycloVector::unit(1);
  const nt::i64 L = static_cast<nt::i64>(ell);
  const u64 L2 = nt::mul_mod(ell % Q, ell % Q, Q);
  // 576 ell^2 X + Q Y = 1
  const auto bz = nt::ext_gcd(static_cast<nt::i64>(nt::mul_mod(576 % Q, L2, Q)), static_cast<nt::i64>(Q));
  if (bz.g != 1) throw NotInvertible("t_sum: 576 ell^2 X + Q Y = 1 has no solution");
  const u64 X = nt::reduce(bz.x, c);
  // t_{d,beta}: d^2 (24 t - 1) = 24 beta - 1 (mod ell)
  const u64 dinv2 = nt::mod_pow(static_cast<nt::i64>(d), -2, ell);
  const u64 rhs = nt::mul_mod(dinv2, nt::reduce(24 * beta - 1, ell), ell);
  const u64 t = nt::mul_mod(nt::mod_inv(24, ell), (rhs + 1) % ell, ell);
  const nt::i64 A = 24 * (L * n + static_cast<nt::i64>(t)) - 1;
  const nt::i64 B = 24 * beta - 1;
  const u64 Ac = nt::reduce(A, c), Bc = nt::reduce(B, c);
  const u64 scale = nt::reduce(-24 * static_cast<nt::i64>(X), c);
  CycloVector v = CycloVector::zero(c);
  for (u64 s = 1; s < c; ++s) {
    if (nt::gcd(s, c) != 1) continue;
    const int chi = nt::jacobi(24 * L * static_cast<nt::i64>(s), static_cast<nt::i64>(c));
    if (chi == 0) continue;
    const u64 sb = nt::mod_inv(static_cast<nt::i64>(s), c);
    const u64 inner = (nt::mul_mod(sb, Ac, c) + nt::mul_mod(s, Bc, c)) % c;
    v.counts[nt::mul_mod(scale, inner, c)] += chi;
  }
  return v;
}

CycloVector ring_mul(const CycloVector& u, const CycloVector& v) {
  if (u.c != v.c) throw std::invalid_argument("ring_mul: moduli differ");
  CycloVector w = CycloVector::zero(u.c);
  const u64 c = u.c;
  for (u64 i = 0; i < c; ++i) {
    if (u.counts[i] == 0) continue;
    for (u64 j = 0; j < c; ++j) {
      if (v.counts[j] == 0) continue;
      const u64 k = i + j >= c ? i + j - c : i + j;
      w.counts[k] += u.counts[i] * v.counts[j];
    }
  }
  return w;
}

CycloVector galois(const CycloVector& v, i64 u) {
  if (nt::gcd(nt::reduce(u, v.c), v.c) != 1 && v.c != 1)
    throw std::invalid_argument("galois: exponent must be a unit");
  CycloVector w = CycloVector::zero(v.c);
  const u64 U = nt::reduce(u, v.c);
  for (u64 e = 0; e < v.c; ++e) w.counts[nt::mul_mod(U, e, v.c)] += v.counts[e];
  return w;
}

std::vector<i64> cyclotomic_poly(u64 c) {
  require_c(c);
  static std::mutex mu;
  static std::map<u64, std::vector<i64>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(c); it != memo.end()) return it->second;
  }
  // x^c - 1 divided by Phi_d for every proper divisor d
  std::vector<i64> p(c + 1, 0);
  p[0] = -1;
  p[c] = 1;
  for (u64 d = 1; d < c; ++d) {
    if (c % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
  }
  std::lock_guard lock(mu);
  memo.emplace(c, p);
  return p;
}

std::vector<i64> reduce_mod_phi(const CycloVector& v) { return poly_rem(v.counts, cyclotomic_poly(v.c)); }

bool equal_in_ring(const CycloVector& u, const CycloVector& v) {
  if (u.c != v.c) throw std::invalid_argument("equal_in_ring: moduli differ");
  const auto r = reduce_mod_phi(u - v);
  return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
}

std::optional<i64> as_rational_integer(const CycloVector& v) {
  const auto r = reduce_mod_phi(v);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? 0 : r[0];
}

const char* to_string(Vanishing v) {
  switch (v) {
    case Vanishing::NonvanishingEverywhere: return "NonvanishingEverywhere";
    case Vanishing::VanishesSomewhere: return "VanishesSomewhere";
    case Vanishing::VanishesEverywhere: return "VanishesEverywhere";
  }
  return "?";
}

Vanishing vanishes_mod_ell(const CycloVector& v, u64 ell) {
  if (!nt::is_prime(ell)) throw std::invalid_argument("vanishes_mod_ell: ell must be prime");
  const u64 c = v.c;
  if (c == 1) {
    return nt::reduce(v.counts[0], ell) == 0 ? Vanishing::VanishesEverywhere
                                             : Vanishing::NonvanishingEverywhere;
  }
  if (!nt::is_prime(c)) throw std::invalid_argument("vanishes_mod_ell: c must be prime");
  if (c == ell) throw std::invalid_argument("vanishes_mod_ell: ell divides c");
  Fp f(c);
  for (u64 e = 0; e < c; ++e) f[e] = nt::reduce(v.counts[e], ell);
  const Fp phi(c, 1);  // 1 + x + ... + x^(c-1)
  Fp r = fp_rem(f, phi, ell);
  if (r.empty()) return Vanishing::VanishesEverywhere;
  const Fp g = fp_gcd(phi, r, ell);
  return g.size() <= 1 ? Vanishing::NonvanishingEverywhere : Vanishing::VanishesSomewhere;
}

ClassRep kloosterman_class_rep(i64 a, i64 b, u64 Q) {
  if (Q < 3 || !nt::is_prime(Q)) throw std::invalid_argument("kloosterman_class_rep: Q must be an odd prime");
  const nt::i64 q = static_cast<nt::i64>(Q);
  const u64 ab = nt::mul_mod(nt::reduce(a, Q), nt::reduce(b, Q), Q);
  if (ab == 0) throw std::invalid_argument("kloosterman_class_rep: Q divides ab");
  if (nt::jacobi(static_cast<nt::i64>(ab), q) == 1) return {1, 1};
  for (nt::i64 n = 2;; ++n)
    if (nt::jacobi(n, q) == -1) return {1, n};
}

}  // namespace partcong::cyclo
