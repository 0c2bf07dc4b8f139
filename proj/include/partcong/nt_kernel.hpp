#pragma once

// Exact integer and modular arithmetic shared by every module.
//
// All arithmetic is on 64-bit words with 128-bit intermediates. Moduli are
// positive and fit in 63 bits; residues are returned in [0, m).

#include <cstdint>
#include <span>
#include <vector>

namespace partcong::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// A positive modulus, optionally certified prime.
struct Modulus {
  u64 m = 1;
  bool is_prime = false;

  /// Validates m >= 1; the prime flag is set only after a deterministic test.
  static Modulus make(u64 m);
  /// Throws std::invalid_argument unless p is prime.
  static Modulus prime(u64 p);

  bool operator==(const Modulus&) const = default;
};

/// Least nonnegative residue of a modulo m.
constexpr u64 reduce(i64 a, u64 m) {
  const i64 r = static_cast<i64>(static_cast<i128>(a) % static_cast<i128>(m));
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 add_mod(u64 a, u64 b, u64 m) {
  const u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 gcd(u64 a, u64 b);

/// Extended Euclid: returns g = gcd(a, b) and x, y with a*x + b*y = g.
struct Bezout {
  i64 g;
  i64 x;
  i64 y;
};
Bezout ext_gcd(i64 a, i64 b);

/// Jacobi symbol (a/n) for odd n >= 1; negative a handled through (-1/n).
int jacobi(i64 a, i64 n);

/// Legendre-style symbol (a/n) extended to n = 1 and to a with gcd > 1 (gives 0).
/// Same contract as jacobi; named separately where the argument is a character.
inline int legendre(i64 a, i64 p) { return jacobi(a, p); }

/// a^{-1} mod m; throws NotInvertible if gcd(a, m) != 1.
u64 mod_inv(i64 a, u64 m);

/// a^e mod m with signed e; e < 0 goes through mod_inv.
u64 mod_pow(i64 a, i64 e, u64 m);

/// Deterministic over the full 64-bit range.
bool is_prime(u64 n);

/// One strong-pseudoprime round to base 2 after trial division by tiny primes.
/// Never rejects a prime.
bool is_probable_prime(u64 n);

struct Congruence {
  u64 residue = 0;
  u64 modulus = 1;
  bool operator==(const Congruence&) const = default;
};

/// Combines pairwise coprime classes; throws std::invalid_argument otherwise.
Congruence crt_combine(std::span<const Congruence> classes);

/// Exact 24th root of unity e(k/24), stored as k mod 24.
class Root24 {
 public:
  constexpr Root24() = default;
  constexpr explicit Root24(i64 k) : k_(static_cast<int>(reduce(k, 24))) {}

  static constexpr Root24 one() { return Root24(0); }
  static constexpr Root24 minus_one() { return Root24(12); }
  static constexpr Root24 i() { return Root24(6); }

  constexpr int exponent() const { return k_; }
  constexpr Root24 operator*(Root24 o) const { return Root24(k_ + o.k_); }
  constexpr Root24 pow(i64 e) const { return Root24(static_cast<i64>(k_) * reduce(e, 24)); }
  constexpr Root24 inverse() const { return Root24(-k_); }
  constexpr bool operator==(const Root24&) const = default;

  /// Multiplies by a sign in {+1, -1}.
  constexpr Root24 times_sign(int s) const { return s < 0 ? *this * minus_one() : *this; }

 private:
  int k_ = 0;
};

/// epsilon_d = 1 if d = 1 (mod 4), i if d = 3 (mod 4). Throws for even d.
Root24 epsilon_d(i64 d);

/// The eta multiplier nu_eta([[a, b], [c, d]]) for c > 0, with the Jacobi sign
/// folded into the exponent (a sign of -1 adds 12).
Root24 eta_multiplier(i64 a, i64 b, i64 c, i64 d);

/// Primes p with lo <= p <= hi, by a segmented sieve of Eratosthenes.
std::vector<u64> primes_in(u64 lo, u64 hi);

/// Integer square root (floor).
u64 isqrt(u64 n);

/// True if n is not divisible by the square of any prime.
bool is_squarefree(u64 n);

/// Distinct prime divisors of n (trial division; intended for n < 2^40).
std::vector<u64> prime_divisors(u64 n);

/// Ceiling and floor division for signed numerators, positive divisors.
constexpr i64 floor_div(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr i64 ceil_div(i64 a, i64 b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace partcong::nt
