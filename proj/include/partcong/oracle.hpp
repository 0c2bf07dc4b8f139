#pragma once

// Deliberately naive reference implementations. Nothing here shares code with
// the core library beyond plain integer types; they exist so tests can compare
// two unrelated computations of the same quantity.

#include <cstdint>
#include <vector>

namespace partcong::oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// p(n) by explicit enumeration of partitions (largest-part recursion). n <= 80.
u64 brute_partition_count(int n);

/// p(0..n_max) mod m via the coin-change recurrence over part sizes.
std::vector<u64> partitions_by_parts(u64 n_max, u64 m);

/// Legendre symbol by Euler's criterion, p an odd prime.
int euler_legendre(i64 a, u64 p);

/// Trial-division primality.
bool trial_prime(u64 n);

/// Primes 5 <= Q <= q_max surviving the obstruction: some eps in {+1,-1} with
/// (n/Q) != eps for every n in `ns`, evaluated prime by prime.
std::vector<u64> naive_survivors(const std::vector<u64>& ns, u64 q_max);

/// The witness integers of build_B, recomputed from partitions_by_parts.
std::vector<u64> naive_B(u64 ell, int delta, std::size_t count, u64 scan_limit);

/// Coefficients a(n), n < N, of sum_{(-n/ell) = delta} p((n+1)/24) q^(n/24) mod ell.
std::vector<u64> naive_f_ell_delta(u64 ell, int delta, i64 N);

/// Coefficients of prod_{m>=1} (1 - q^m)^r mod ell to q^(N-1), by repeated
/// multiplication or division by single factors. r may be negative.
std::vector<u64> naive_euler_power(i64 r, u64 ell, i64 N);

}  // namespace partcong::oracle
