#include "partcong/qseries.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/partition.hpp"

namespace partcong::qseries {

using nt::ceil_div;
using nt::floor_div;

namespace {

using Poly = std::vector<u32>;

int mod24(i64 x) { return static_cast<int>(nt::reduce(x, 24)); }

// Smallest n >= lo with n = r (mod 24).
i64 align_up(i64 lo, int r) { return lo + mod24(r - lo); }

EtaSeries blank(u64 ell, int r, int weight2, int chi, i64 start_lo, i64 precision) {
  EtaSeries f;
  f.ell = ell;
  f.r = mod24(r);
  f.weight2 = weight2;
  f.chi_minus1 = chi;
  f.precision = precision;
  f.start = align_up(start_lo, f.r);
  f.c.assign(f.slots(), 0);
  return f;
}

// Truncated product of two x-series mod ell, first `len` terms.
Poly mul_trunc(const Poly& a, const Poly& b, std::size_t len, u64 ell) {
  Poly out(len, 0);
  if (a.empty() || b.empty() || len == 0) return out;
  const Poly* sparse = &a;
  const Poly* dense = &b;
  const auto nnz = [](const Poly& p) { return std::count_if(p.begin(), p.end(), [](u32 x) { return x != 0; }); };
  if (nnz(a) > nnz(b)) std::swap(sparse, dense);
  std::vector<u64> acc(len, 0);
  const u64 sq = (ell - 1) * (ell - 1);
  const u64 batch = sq == 0 ? std::numeric_limits<u64>::max() : std::numeric_limits<u64>::max() / sq - 1;
  u64 pending = 0;
  for (std::size_t j = 0; j < sparse->size() && j < len; ++j) {
    const u64 x = (*sparse)[j];
    if (x == 0) continue;
    const std::size_t top = std::min(len - j, dense->size());
    const u32* d = dense->data();
    u64* o = acc.data() + j;
    for (std::size_t i = 0; i < top; ++i) o[i] += x * d[i];
    if (++pending >= batch) {
      for (auto& v : acc) v %= ell;
      pending = 0;
    }
  }
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<u32>(acc[i] % ell);
  return out;
}

Poly inv_trunc(const Poly& u, std::size_t len, u64 ell) {
  if (u.empty() || u[0] == 0) throw NotInvertible("series inverse: leading coefficient is zero");
  const u64 g0 = nt::mod_inv(u[0], ell);
  std::vector<std::pair<std::size_t, u64>> terms;
  for (std::size_t k = 1; k < u.size() && k < len; ++k)
    if (u[k] != 0) terms.emplace_back(k, u[k]);
  Poly g(len, 0);
  if (len == 0) return g;
  g[0] = static_cast<u32>(g0);
  for (std::size_t i = 1; i < len; ++i) {
    u64 s = 0;
    for (const auto& [k, v] : terms) {
      if (k > i) break;
      s = (s + v * g[i - k]) % ell;
    }
    g[i] = static_cast<u32>(nt::mul_mod(ell - s == ell ? 0 : ell - s, g0, ell));
  }
  return g;
}

Poly pow_trunc(Poly base, u64 e, std::size_t len, u64 ell) {
  Poly acc(len, 0);
  if (len == 0) return acc;
  acc[0] = static_cast<u32>(1 % ell);
  base.resize(std::min(base.size(), len));
  while (e > 0) {
    if (e & 1) acc = mul_trunc(acc, base, len, ell);
    e >>= 1;
    if (e) base = mul_trunc(base, base, len, ell);
  }
  return acc;
}

// prod_{m >= 1} (1 - x^m) to `len` terms, from the pentagonal number theorem.
Poly euler_product(std::size_t len, u64 ell) {
  Poly e(len, 0);
  if (len == 0) return e;
  e[0] = 1 % ell;
  for (i64 k = 1;; ++k) {
    const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    if (g1 >= len) break;
    const u32 s = static_cast<u32>((k & 1) ? ell - 1 : 1 % ell);
    e[g1] = s;
    const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g2 < len) e[g2] = s;
  }
  return e;
}

void require_same_ring(const EtaSeries& f, const EtaSeries& g) {
  if (f.ell != g.ell) throw std::invalid_argument("series over different moduli");
}

void require_Q(u64 Q, const char* who) {
  if (Q < 5 || !nt::is_prime(Q))
    throw std::invalid_argument(std::string(who) + ": Q must be a prime >= 5");
}

int sign_pow(int s, i64 e) { return (s < 0 && (e & 1)) ? -1 : 1; }

u64 signed_residue(int s, u64 ell) { return s > 0 ? 1 % ell : (s < 0 ? ell - 1 : 0); }

}  // namespace

std::size_t EtaSeries::slots() const {
  if (precision <= start) return 0;
  return static_cast<std::size_t>(ceil_div(precision - start, 24));
}

u32 EtaSeries::coeff(i64 n) const {
  if (n >= precision)
    throw PrecisionShortfall("coefficient " + std::to_string(n) + " requested, precision is " +
                             std::to_string(precision));
  if (n < start || (n - start) % 24 != 0) return 0;
  return c[static_cast<std::size_t>((n - start) / 24)];
}

bool EtaSeries::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](u32 x) { return x == 0; });
}

std::optional<i64> EtaSeries::first_nonzero() const {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return start + 24 * static_cast<i64>(i);
  return std::nullopt;
}

bool EtaSeries::support_ok() const {
  if (mod24(start) != r) return false;
  if (c.size() != slots()) return false;
  return true;
}

bool EtaSeries::obstruction_forces_zero() const {
  if (std::gcd(r, 24) != 1) return false;
  return nt::reduce(weight2 - r, 4) != nt::reduce(1 - chi_minus1, 4);
}

u32 IntegralSeries::coeff(i64 n) const {
  if (n >= precision)
    throw PrecisionShortfall("coefficient " + std::to_string(n) + " requested, precision is " +
                             std::to_string(precision));
  if (n < 0) return 0;
  return c[static_cast<std::size_t>(n)];
}

bool IntegralSeries::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](u32 x) { return x == 0; });
}

EtaSeries zero_series(u64 ell, int r, int weight2, i64 precision) {
  return blank(ell, r, weight2, 1, r, precision);
}

EtaSeries eta_power(i64 r, u64 ell, i64 N) {
  if (ell < 2) throw std::invalid_argument("eta_power: modulus must be >= 2");
  EtaSeries f = blank(ell, mod24(r), static_cast<int>(r), 1, r, N);
  const std::size_t len = f.c.size();
  if (len == 0) return f;
  const Poly e = euler_product(len, ell);
  const u64 a = static_cast<u64>(r < 0 ? -r : r);
  Poly p = pow_trunc(e, a, len, ell);
  if (r < 0) p = inv_trunc(p, len, ell);
  f.c = std::move(p);
  return f;
}

EtaSeries add(const EtaSeries& f, const EtaSeries& g) {
  require_same_ring(f, g);
  if (f.r != g.r) throw std::invalid_argument("add: multiplier exponents differ");
  if (f.weight2 != g.weight2) throw std::invalid_argument("add: weights differ");
  EtaSeries h = blank(f.ell, f.r, f.weight2, f.chi_minus1, std::min(f.start, g.start),
                      std::min(f.precision, g.precision));
  for (std::size_t i = 0; i < h.c.size(); ++i) {
    const i64 n = h.start + 24 * static_cast<i64>(i);
    h.c[i] = static_cast<u32>(nt::add_mod(f.coeff(n), g.coeff(n), f.ell));
  }
  return h;
}

EtaSeries scale(const EtaSeries& f, i64 s) {
  EtaSeries h = f;
  const u64 m = nt::reduce(s, f.ell);
  for (auto& x : h.c) x = static_cast<u32>(nt::mul_mod(x, m, f.ell));
  return h;
}

EtaSeries sub(const EtaSeries& f, const EtaSeries& g) { return add(f, scale(g, -1)); }

EtaSeries mul(const EtaSeries& f, const EtaSeries& g) {
  require_same_ring(f, g);
  const i64 prec = std::min(f.precision + g.start, g.precision + f.start);
  EtaSeries h = blank(f.ell, f.r + g.r, f.weight2 + g.weight2, f.chi_minus1 * g.chi_minus1,
                      f.start + g.start, prec);
  h.c = mul_trunc(f.c, g.c, h.c.size(), f.ell);
  return h;
}

EtaSeries inverse(const EtaSeries& f) {
  const auto lead = f.first_nonzero();
  if (!lead) throw NotInvertible("inverse of the zero series");
  const std::size_t skip = static_cast<std::size_t>((*lead - f.start) / 24);
  Poly u(f.c.begin() + static_cast<std::ptrdiff_t>(skip), f.c.end());
  const i64 s = *lead;
  EtaSeries h = blank(f.ell, -f.r, -f.weight2, f.chi_minus1, -s, f.precision - 2 * s);
  h.c = inv_trunc(u, h.c.size(), f.ell);
  return h;
}

EtaSeries truncate(const EtaSeries& f, i64 N) {
  EtaSeries h = f;
  h.precision = std::min(f.precision, N);
  h.c.resize(h.slots());
  return h;
}

EtaSeries u_op(const EtaSeries& f, u64 m) {
  if (m == 0 || std::gcd<u64, u64>(m, 6) != 1)
    throw std::invalid_argument("u_op: m must be positive and coprime to 6");
  if (m == 1) return f;
  const i64 M = static_cast<i64>(m);
  EtaSeries h = blank(f.ell, f.r * M, f.weight2, f.chi_minus1 * nt::jacobi(-1, M),
                      ceil_div(f.start, M), floor_div(f.precision, M));
  for (std::size_t i = 0; i < h.c.size(); ++i) h.c[i] = f.coeff(M * (h.start + 24 * static_cast<i64>(i)));
  return h;
}

EtaSeries v_op(const EtaSeries& f, u64 m, i64 cap) {
  if (m == 0 || std::gcd<u64, u64>(m, 6) != 1)
    throw std::invalid_argument("v_op: m must be positive and coprime to 6");
  if (m == 1) return cap > 0 ? truncate(f, cap) : f;
  const i64 M = static_cast<i64>(m);
  i64 prec = f.precision * M;
  if (cap > 0) prec = std::min(prec, cap);
  EtaSeries h = blank(f.ell, f.r * M, f.weight2, f.chi_minus1 * nt::jacobi(-1, M), f.start * M, prec);
  // f.start * M = r * M (mod 24), so every M-th slot is an image point
  for (std::size_t j = 0; j < f.c.size(); ++j) {
    const std::size_t i = j * m;
    if (i >= h.c.size()) break;
    h.c[i] = f.c[j];
  }
  return h;
}

EtaSeries twist(const EtaSeries& f, u64 Q) {
  if (Q < 5 || (Q & 1) == 0) throw std::invalid_argument("twist: Q must be odd and >= 5");
  EtaSeries h = f;
  const i64 q = static_cast<i64>(Q);
  for (std::size_t i = 0; i < h.c.size(); ++i) {
    if (h.c[i] == 0) continue;
    const int s = nt::jacobi(f.start + 24 * static_cast<i64>(i), q);
    if (s == 0) h.c[i] = 0;
    else if (s < 0) h.c[i] = static_cast<u32>(f.ell - h.c[i]);
  }
  return h;
}

EtaSeries hecke_TQ2(const EtaSeries& f, u64 Q) {
  require_Q(Q, "hecke_TQ2");
  if (Q == f.ell) throw std::invalid_argument("hecke_TQ2: Q must differ from ell");
  if ((f.weight2 & 1) == 0) throw std::invalid_argument("hecke_TQ2: weight must be half-integral");
  const i64 q = static_cast<i64>(Q);
  const i64 q2 = q * q;
  const u64 ell = f.ell;
  // Q^(k-3/2) (-1/Q)^(k-1/2) and Q^(2k-2), exponents as exact integers via 2k
  const i64 e1 = (f.weight2 - 3) / 2;
  const i64 eps = (f.weight2 - 1) / 2;
  u64 c1 = nt::mod_pow(q, e1, ell);
  if (sign_pow(nt::jacobi(-1, q), eps) < 0) c1 = (ell - c1) % ell;
  const u64 c2 = nt::mod_pow(q, f.weight2 - 2, ell);
  EtaSeries h = blank(ell, f.r, f.weight2, f.chi_minus1, f.start, floor_div(f.precision, q2));
  for (std::size_t i = 0; i < h.c.size(); ++i) {
    const i64 n = h.start + 24 * static_cast<i64>(i);
    u64 v = f.coeff(q2 * n);
    const u32 an = f.coeff(n);
    if (an != 0) {
      const int s = nt::jacobi(12 * n, q);
      v = nt::add_mod(v, nt::mul_mod(nt::mul_mod(c1, an, ell), signed_residue(s, ell), ell), ell);
    }
    if (n % q2 == 0) v = nt::add_mod(v, nt::mul_mod(c2, f.coeff(n / q2), ell), ell);
    h.c[i] = static_cast<u32>(v);
  }
  return h;
}

IntegralSeries shimura_lift(const EtaSeries& f, u64 t, i64 n_count) {
  if (t == 0 || std::gcd<u64, u64>(t, 6) != 1 || !nt::is_squarefree(t))
    throw std::invalid_argument("shimura_lift: t must be squarefree and coprime to 6");
  if ((f.weight2 & 1) == 0) throw std::invalid_argument("shimura_lift: weight must be half-integral");
  const i64 T = static_cast<i64>(t);
  // every n with t n^2 < precision
  i64 avail = 0;
  if (f.precision > 0) avail = static_cast<i64>(nt::isqrt(static_cast<u64>((f.precision - 1) / T))) + 1;
  if (n_count == 0) n_count = avail;
  if (n_count > avail)
    throw PrecisionShortfall("shimura_lift: need a(" + std::to_string(T * (n_count - 1) * (n_count - 1)) +
                             ") but precision is " + std::to_string(f.precision));
  const u64 ell = f.ell;
  IntegralSeries F;
  F.ell = ell;
  F.weight = f.weight2 - 1;
  F.precision = n_count;
  std::vector<u64> acc(static_cast<std::size_t>(std::max<i64>(n_count, 0)), 0);
  const i64 e_pow = (f.weight2 - 3) / 2;
  const i64 e_sign = (f.weight2 - 1) / 2;
  for (i64 d = 1; d < n_count; ++d) {
    if (std::gcd<i64, i64>(d, 6) != 1) continue;  // (12t/d) = 0
    const int chi = nt::jacobi(12 * T, d);
    if (chi == 0) continue;
    const int s = chi * sign_pow(nt::jacobi(-1, d), e_sign);
    u64 w;
    if (d % static_cast<i64>(ell) == 0) {
      if (e_pow < 0) throw NotInvertible("shimura_lift: negative power of a multiple of ell");
      w = e_pow == 0 ? 1 % ell : 0;
    } else {
      w = nt::mod_pow(d, e_pow, ell);
    }
    if (w == 0) continue;
    w = nt::mul_mod(w, signed_residue(s, ell), ell);
    for (i64 m = 1; m * d < n_count; ++m) {
      // a(t (md)^2 / d^2) = a(t m^2)
      const u32 a = f.coeff(T * m * m);
      if (a != 0) acc[m * d] = (acc[m * d] + nt::mul_mod(w, a, ell)) % ell;
    }
  }
  F.c.assign(acc.size(), 0);
  for (std::size_t i = 0; i < acc.size(); ++i) F.c[i] = static_cast<u32>(acc[i]);
  return F;
}

IntegralSeries hecke_TQ(const IntegralSeries& F, u64 Q) {
  require_Q(Q, "hecke_TQ");
  const i64 q = static_cast<i64>(Q);
  IntegralSeries G;
  G.ell = F.ell;
  G.weight = F.weight;
  G.precision = floor_div(F.precision, q);
  G.c.assign(static_cast<std::size_t>(std::max<i64>(G.precision, 0)), 0);
  const u64 c = nt::mod_pow(q, F.weight - 1, F.ell);
  for (i64 n = 0; n < G.precision; ++n) {
    u64 v = F.coeff(q * n);
    if (n % q == 0) v = nt::add_mod(v, nt::mul_mod(c, F.coeff(n / q), F.ell), F.ell);
    G.c[static_cast<std::size_t>(n)] = static_cast<u32>(v);
  }
  return G;
}

EtaSeries f_ell_delta(u64 ell, int delta, i64 N) {
  if (ell < 5 || !nt::is_prime(ell)) throw std::invalid_argument("f_ell_delta: ell must be a prime >= 5");
  if (delta != 0 && delta != -1) throw std::invalid_argument("f_ell_delta: delta must be 0 or -1");
  const i64 L = static_cast<i64>(ell);
  const int w2 = static_cast<int>(delta == 0 ? L * L - 2 * L : L * L - 2);
  EtaSeries f = blank(ell, 23, w2, 1, -1, N);
  if (f.c.empty()) return f;
  const auto table = partition::table_for(ell, f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    const i64 n = -1 + 24 * static_cast<i64>(i);
    if (nt::jacobi(-n, L) == delta) f.c[i] = table->values[i];
  }
  return f;
}

EtaSeries construct_F_ell(u64 ell, i64 N) {
  if (ell < 5 || !nt::is_prime(ell)) throw std::invalid_argument("construct_F_ell: ell must be a prime >= 5");
  const i64 L = static_cast<i64>(ell);
  // eta^(ell^2-1) | U_ell starts at a positive multiple of 24 >= ell - 1/ell, so
  // dividing by eta^ell (start -ell) needs U-precision N + ell and eta-precision N.
  const i64 need_u = std::max<i64>(N + L, 1);
  const EtaSeries big = eta_power(L * L - 1, ell, need_u * L);
  const EtaSeries g = u_op(big, ell);
  const EtaSeries inv = eta_power(-L, ell, N + L);
  EtaSeries F = truncate(mul(g, inv), N);
  if (F.precision < N) throw PrecisionShortfall("construct_F_ell: internal precision accounting");
  return F;
}

std::optional<i64> series_equal_mod(const EtaSeries& f, const EtaSeries& g, i64 N) {
  if (f.precision < N || g.precision < N)
    throw PrecisionShortfall("series_equal_mod: common precision below " + std::to_string(N));
  require_same_ring(f, g);
  std::optional<i64> best;
  const auto scan = [&](const EtaSeries& a, const EtaSeries& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      const i64 n = a.start + 24 * static_cast<i64>(i);
      if (n >= N || (best && n >= *best)) break;
      if (a.c[i] != b.coeff(n)) {
        best = n;
        break;
      }
    }
  };
  scan(f, g);
  scan(g, f);
  return best;
}

}  // namespace partcong::qseries
