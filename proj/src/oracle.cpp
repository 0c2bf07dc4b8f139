#include "partcong/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace partcong::oracle {

namespace {

u64 count_with_max(int n, int max_part) {
  if (n == 0) return 1;
  u64 total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_with_max(n - k, k);
  return total;
}

u64 slow_pow(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = static_cast<unsigned __int128>(r) * a % m;
    a = static_cast<unsigned __int128>(a) * a % m;
    e >>= 1;
  }
  return r;
}

u64 pos_mod(i64 a, u64 m) {
  const i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

}  // namespace

u64 brute_partition_count(int n) {
  if (n < 0) return 0;
  if (n > 80) throw std::invalid_argument("brute_partition_count: n too large");
  return count_with_max(n, n);
}

std::vector<u64> partitions_by_parts(u64 n_max, u64 m) {
  std::vector<u64> p(n_max + 1, 0);
  p[0] = 1 % m;
  for (u64 k = 1; k <= n_max; ++k)
    for (u64 n = k; n <= n_max; ++n) p[n] = (p[n] + p[n - k]) % m;
  return p;
}

int euler_legendre(i64 a, u64 p) {
  const u64 r = slow_pow(pos_mod(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> naive_survivors(const std::vector<u64>& ns, u64 q_max) {
  std::vector<u64> out;
  for (u64 Q = 5; Q <= q_max; ++Q) {
    if (!trial_prime(Q)) continue;
    bool plus = false, minus = false;
    for (u64 n : ns) {
      const int s = euler_legendre(static_cast<i64>(n % Q), Q);
      plus |= s == 1;
      minus |= s == -1;
    }
    if (!plus || !minus) out.push_back(Q);
  }
  return out;
}

std::vector<u64> naive_B(u64 ell, int delta, std::size_t count, u64 scan_limit) {
  const auto p = partitions_by_parts(scan_limit, ell);
  std::vector<u64> out;
  for (u64 beta = 1; beta < scan_limit && out.size() < count; ++beta) {
    const i64 m = 1 - 24 * static_cast<i64>(beta);
    if (euler_legendre(m, ell) != delta || p[beta] == 0) continue;
    out.push_back(delta == 0 ? (24 * beta - 1) / ell : 24 * beta - 1);
  }
  return out;
}

std::vector<u64> naive_f_ell_delta(u64 ell, int delta, i64 N) {
  std::vector<u64> a(static_cast<std::size_t>(std::max<i64>(N, 0)), 0);
  if (N <= 0) return a;
  const auto p = partitions_by_parts(static_cast<u64>(N / 24 + 1), ell);
  for (i64 n = 23; n < N; n += 24)
    if (euler_legendre(-n, ell) == delta) a[static_cast<std::size_t>(n)] = p[static_cast<std::size_t>((n + 1) / 24)];
  return a;
}

std::vector<u64> naive_euler_power(i64 r, u64 ell, i64 N) {
  std::vector<u64> a(static_cast<std::size_t>(N), 0);
  a[0] = 1;
  const i64 reps = r < 0 ? -r : r;
  for (i64 m = 1; m < N; ++m) {
    for (i64 k = 0; k < reps; ++k) {
      if (r > 0) {  // times (1 - q^m)
        for (i64 n = N - 1; n >= m; --n) a[n] = (a[n] + ell - a[n - m]) % ell;
      } else {  // divided by (1 - q^m)
        for (i64 n = m; n < N; ++n) a[n] = (a[n] + a[n - m]) % ell;
      }
    }
  }
  return a;
}

}  // namespace partcong::oracle
