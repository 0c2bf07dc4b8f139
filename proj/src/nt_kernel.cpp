#include "partcong/nt_kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partcong/errors.hpp"

namespace partcong::nt {

Modulus Modulus::make(u64 m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  return Modulus{m, nt::is_prime(m)};
}

Modulus Modulus::prime(u64 p) {
  if (!nt::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Modulus{p, true};
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Bezout ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

int jacobi(i64 a_in, i64 n_in) {
  if (n_in <= 0 || (n_in & 1) == 0)
    throw std::invalid_argument("jacobi: n must be odd and positive, got " + std::to_string(n_in));
  u64 n = static_cast<u64>(n_in);
  u64 a = reduce(a_in, n);
  int s = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const u64 r = n & 7;
      if (r == 3 || r == 5) s = -s;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) s = -s;
    a %= n;
  }
  return n == 1 ? s : 0;
}

u64 mod_inv(i64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("mod_inv: zero modulus");
  if (m == 1) return 0;
  const auto b = ext_gcd(static_cast<i64>(reduce(a, m)), static_cast<i64>(m));
  if (b.g != 1)
    throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return reduce(b.x, m);
}

namespace {

u64 pow_u(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool sprp(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = pow_u(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

u64 mod_pow(i64 a, i64 e, u64 m) {
  if (m == 0) throw std::invalid_argument("mod_pow: zero modulus");
  if (e >= 0) return pow_u(reduce(a, m), static_cast<u64>(e), m);
  // -e can overflow only for INT64_MIN; split off one factor first
  const u64 inv = mod_inv(a, m);
  return pow_u(inv, static_cast<u64>(-(e + 1)) + 1, m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jim Sinclair's seven bases are a certificate for all n < 2^64
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

bool is_probable_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  return sprp(n, 2, d, s);
}

Congruence crt_combine(std::span<const Congruence> classes) {
  Congruence acc{0, 1};
  for (const auto& c : classes) {
    if (c.modulus == 0) throw std::invalid_argument("crt_combine: zero modulus");
    if (gcd(acc.modulus, c.modulus) != 1)
      throw std::invalid_argument("crt_combine: moduli not pairwise coprime");
    const u64 r = c.residue % c.modulus;
    // acc.residue + acc.modulus * k == r (mod c.modulus)
    const u64 diff = sub_mod(r, acc.residue % c.modulus, c.modulus);
    const u64 k = mul_mod(diff, mod_inv(static_cast<i64>(acc.modulus % c.modulus), c.modulus),
                          c.modulus);
    const u128 M = static_cast<u128>(acc.modulus) * c.modulus;
    if (M >> 64) throw std::overflow_error("crt_combine: product of moduli exceeds 64 bits");
    acc.residue = static_cast<u64>(acc.residue + static_cast<u128>(acc.modulus) * k);
    acc.modulus = static_cast<u64>(M);
  }
  return acc;
}

Root24 epsilon_d(i64 d) {
  if ((d & 1) == 0) throw std::invalid_argument("epsilon_d: d must be odd");
  return reduce(d, 4) == 1 ? Root24::one() : Root24::i();
}

Root24 eta_multiplier(i64 a, i64 b, i64 c, i64 d) {
  if (c <= 0) throw std::invalid_argument("eta_multiplier: requires c > 0");
  if (static_cast<i128>(a) * d - static_cast<i128>(b) * c != 1)
    throw std::invalid_argument("eta_multiplier: determinant must be 1");
  const i128 A = a, B = b, C = c, D = d;
  i128 x;
  int sign;
  if (c & 1) {
    sign = jacobi(d, c);
    x = (A + D) * C - B * D * (C * C - 1) - 3 * C;
  } else {
    // (c/d) for negative d is read as (c/|d|); c > 0 makes every standard extension agree
    sign = jacobi(c, d < 0 ? -d : d);
    x = (A + D) * C - B * D * (C * C - 1) + 3 * D - 3 - 3 * C * D;
  }
  i128 k = x % 24;
  if (k < 0) k += 24;
  return Root24(static_cast<i64>(k)).times_sign(sign);
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || hi < lo) return out;
  if (lo < 2) lo = 2;
  const u64 r = isqrt(hi);
  std::vector<char> small(r + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= r; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= r; j += i) small[j] = 0;
  }
  constexpr u64 kSeg = 1 << 18;
  std::vector<char> seg;
  for (u64 s = lo; s <= hi; s += kSeg) {
    const u64 e = std::min(hi, s + kSeg - 1);
    seg.assign(e - s + 1, 1);
    for (u64 p : base) {
      u64 j = std::max(p * p, (s + p - 1) / p * p);
      for (; j <= e; j += p) seg[j - s] = 0;
    }
    for (u64 i = s; i <= e; ++i)
      if (seg[i - s]) out.push_back(i);
    if (e == hi) break;
  }
  return out;
}

u64 isqrt(u64 n) {
  u64 r = 0;
  for (u64 bit = u64{1} << 31; bit != 0; bit >>= 1) {
    const u64 t = r | bit;
    if (static_cast<u128>(t) * t <= n) r = t;
  }
  return r;
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace partcong::nt
