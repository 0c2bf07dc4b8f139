#pragma once

// Exponential sums as exact elements of Z[x]/(x^c - 1).
//
// A CycloVector with modulus c stands for sum counts[e] zeta_c^e. Equality in
// Z[zeta_c] itself is decided by reducing modulo the cyclotomic polynomial.

#include <cstdint>
#include <optional>
#include <vector>

namespace partcong::cyclo {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct CycloVector {
  u64 c = 1;
  std::vector<i64> counts;

  static CycloVector zero(u64 c);
  static CycloVector unit(u64 c);
  /// zeta_c^e
  static CycloVector monomial(u64 c, i64 e);
  /// The rational integer k embedded as k * zeta^0.
  static CycloVector constant(u64 c, i64 k);

  bool operator==(const CycloVector&) const = default;
  CycloVector operator+(const CycloVector& o) const;
  CycloVector operator-(const CycloVector& o) const;
  CycloVector operator*(i64 k) const;
  /// Sum of all counts; for Kloosterman vectors this is phi(c).
  i64 total() const;
};

/// K(a, b, c) = sum over units n mod c of zeta^(a n + b nbar).
CycloVector kloosterman(i64 a, i64 b, u64 c);
/// S(a, b, c) = sum over units n of (n/c) zeta^(a n + b nbar); c odd.
CycloVector salie(i64 a, i64 b, u64 c);
/// G(a, d) = sum over n mod d of (n/d) zeta^(a n); d odd.
CycloVector gauss(i64 a, u64 d);
/// K_2(psi^b, a) = sum over x1 x2 = a (mod Q) of zeta^(b (x1 + x2)).
CycloVector hyper_kloosterman(i64 b, i64 a, u64 Q);

/// The exponential sum T(n, d) of modulus Q/d, evaluated from its definition
/// with X = (576 ell^2)^(-1) mod Q.
CycloVector t_sum(i64 n, u64 d, u64 ell, u64 Q, i64 beta);

/// Cyclic convolution (multiplication in Z[x]/(x^c - 1)).
CycloVector ring_mul(const CycloVector& u, const CycloVector& v);
/// Applies zeta -> zeta^u for a unit u: counts'[u e] = counts[e].
CycloVector galois(const CycloVector& v, i64 u);

/// Coefficients of Phi_c, lowest degree first.
std::vector<i64> cyclotomic_poly(u64 c);
/// Remainder of v modulo Phi_c: the canonical form in Z[zeta_c], length phi(c).
std::vector<i64> reduce_mod_phi(const CycloVector& v);
/// Equality as elements of Z[zeta_c].
bool equal_in_ring(const CycloVector& u, const CycloVector& v);
/// The rational integer v equals in Z[zeta_c], if it is one.
std::optional<i64> as_rational_integer(const CycloVector& v);

enum class Vanishing { NonvanishingEverywhere, VanishesSomewhere, VanishesEverywhere };
const char* to_string(Vanishing v);

/// Divisibility of v by the primes above ell in Z[zeta_c], c prime (or c = 1).
Vanishing vanishes_mod_ell(const CycloVector& v, u64 ell);

/// (1, c) with c = a b reduced to its square-class representative mod Q:
/// 1 for residues, the least non-residue otherwise.
struct ClassRep {
  i64 a;
  i64 c;
  bool operator==(const ClassRep&) const = default;
};
ClassRep kloosterman_class_rep(i64 a, i64 b, u64 Q);

}  // namespace partcong::cyclo
