#pragma once

// Truncated expansions sum a(n) q^(n/24) with coefficients mod ell.
//
// Exponents are the integer n of q^(n/24). A series with multiplier exponent r
// is supported on n = r (mod 24) and is stored densely along that progression
// starting at `start`. Coefficients are known for every n < precision.

#include <cstdint>
#include <optional>
#include <vector>

namespace partcong::qseries {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct EtaSeries {
  u64 ell = 0;
  int r = 0;           // multiplier exponent mod 24, in [0, 24)
  int weight2 = 0;     // 2k
  int chi_minus1 = 1;  // chi(-1) of the Nebentypus, tracked through U_Q and V_Q
  i64 precision = 0;   // a(n) known for n < precision
  i64 start = 0;       // smallest stored exponent; start = r (mod 24)
  std::vector<u32> c;  // c[i] = a(start + 24 i)

  /// a(n) mod ell; throws PrecisionShortfall for n >= precision.
  u32 coeff(i64 n) const;
  /// Number of progression slots below precision.
  std::size_t slots() const;
  bool is_zero() const;
  /// Smallest n with a(n) != 0, if any.
  std::optional<i64> first_nonzero() const;
  /// Every stored exponent satisfies n = r (mod 24) and n < precision.
  bool support_ok() const;
  /// True when (r, 24) = 1 and 2k - r != 1 - chi(-1) (mod 4): the space is {0}.
  bool obstruction_forces_zero() const;
};

/// Integral-exponent expansion sum A(n) q^n, n >= 0, known for n < precision.
struct IntegralSeries {
  u64 ell = 0;
  int weight = 0;
  i64 precision = 0;
  std::vector<u32> c;

  u32 coeff(i64 n) const;
  bool is_zero() const;
};

/// An empty (all-zero) series with the given metadata.
EtaSeries zero_series(u64 ell, int r, int weight2, i64 precision);

/// eta^r to precision N.
EtaSeries eta_power(i64 r, u64 ell, i64 N);

EtaSeries add(const EtaSeries& f, const EtaSeries& g);
EtaSeries sub(const EtaSeries& f, const EtaSeries& g);
EtaSeries scale(const EtaSeries& f, i64 s);
EtaSeries mul(const EtaSeries& f, const EtaSeries& g);
/// 1/f; the leading stored coefficient must be a unit mod ell.
EtaSeries inverse(const EtaSeries& f);
EtaSeries truncate(const EtaSeries& f, i64 N);

/// b(n) = a(mn). Needs gcd(m, 6) = 1.
EtaSeries u_op(const EtaSeries& f, u64 m);
/// b(mn) = a(n). `cap` bounds the output precision (0 means m * precision).
EtaSeries v_op(const EtaSeries& f, u64 m, i64 cap = 0);
/// b(n) = (n/Q) a(n).
EtaSeries twist(const EtaSeries& f, u64 Q);
/// The half-integral weight Hecke operator of index Q^2.
EtaSeries hecke_TQ2(const EtaSeries& f, u64 Q);

/// A_t(n) for 1 <= n < n_count. n_count = 0 takes every n with t n^2 < precision.
IntegralSeries shimura_lift(const EtaSeries& f, u64 t, i64 n_count = 0);
/// Integral weight Hecke operator: B(n) = A(Qn) + Q^(weight-1) A(n/Q).
IntegralSeries hecke_TQ(const IntegralSeries& F, u64 Q);

/// sum over (-n/ell) = delta of p((n+1)/24) q^(n/24).
EtaSeries f_ell_delta(u64 ell, int delta, i64 N);
/// (eta^(ell^2-1) | U_ell) / eta^ell, known for n < N.
EtaSeries construct_F_ell(u64 ell, i64 N);

/// Smallest n < N with f and g differing, or nullopt when they agree.
std::optional<i64> series_equal_mod(const EtaSeries& f, const EtaSeries& g, i64 N);

}  // namespace partcong::qseries
