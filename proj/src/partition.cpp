#include "partcong/partition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "partcong/errors.hpp"

namespace partcong::partition {

namespace {

std::atomic<std::uint64_t> g_ceiling{0};

std::uint64_t env_ceiling() {
  if (const char* s = std::getenv("PARTCONG_TABLE_CEILING")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);  // accepts 4e6 as well as 4000000
    if (end != s && v >= 1) return static_cast<std::uint64_t>(v);
  }
  return 4'000'000;
}

struct Offset {
  std::int64_t g;
  int sign;
};

// Generalized pentagonal numbers k(3k-1)/2, k(3k+1)/2 below `limit` with the
// sign (-1)^(k+1), in increasing order.
std::vector<Offset> pentagonal(std::uint64_t limit) {
  std::vector<Offset> out;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t g1 = k * (3 * k - 1) / 2;
    if (static_cast<std::uint64_t>(g1) >= limit) break;
    const int s = (k & 1) ? 1 : -1;
    out.push_back({g1, s});
    const std::int64_t g2 = k * (3 * k + 1) / 2;
    if (static_cast<std::uint64_t>(g2) < limit) out.push_back({g2, s});
  }
  return out;
}

constexpr std::int64_t kBlock = 4096;

template <typename Acc>
void fill(std::vector<std::uint32_t>& v, std::uint64_t from, std::uint64_t to, std::uint32_t m,
          const std::vector<Offset>& offs) {
  std::vector<Acc> acc(kBlock);
  const auto M = static_cast<Acc>(m);
  for (std::int64_t s = static_cast<std::int64_t>(from); s < static_cast<std::int64_t>(to);
       s += kBlock) {
    const std::int64_t e = std::min<std::int64_t>(s + kBlock, static_cast<std::int64_t>(to));
    const std::int64_t len = e - s;
    std::fill(acc.begin(), acc.begin() + len, Acc{0});
    std::size_t j = 0;
    // Offsets shorter than the block depend on values computed inside it.
    while (j < offs.size() && offs[j].g < kBlock) ++j;
    const std::size_t near = j;
    for (; j < offs.size(); ++j) {
      const std::int64_t g = offs[j].g;
      if (g > e - 1) break;
      const std::int64_t lo = std::max<std::int64_t>(0, g - s);  // first i with s+i-g >= 0
      const std::uint32_t* src = v.data() + (s + lo - g);
      Acc* a = acc.data() + lo;
      const std::int64_t cnt = len - lo;
      if (offs[j].sign > 0) {
        for (std::int64_t i = 0; i < cnt; ++i) a[i] += static_cast<Acc>(src[i]);
      } else {
        for (std::int64_t i = 0; i < cnt; ++i) a[i] -= static_cast<Acc>(src[i]);
      }
    }
    for (std::int64_t i = 0; i < len; ++i) {
      const std::int64_t n = s + i;
      Acc x = acc[i];
      if (n == 0) x = 1;
      for (std::size_t k = 0; k < near; ++k) {
        const std::int64_t g = offs[k].g;
        if (g > n) break;
        x += offs[k].sign > 0 ? static_cast<Acc>(v[n - g]) : -static_cast<Acc>(v[n - g]);
      }
      x %= M;
      if (x < 0) x += M;
      v[n] = static_cast<std::uint32_t>(x);
    }
  }
}

std::mutex g_mu;
std::map<std::uint64_t, std::shared_ptr<const PartitionTable>> g_cache;

}  // namespace

std::uint32_t PartitionTable::at(std::int64_t n) const {
  if (n < 0) return 0;
  if (static_cast<std::uint64_t>(n) >= values.size())
    throw TableShortfall("partition table mod " + std::to_string(modulus) + " has limit " +
                         std::to_string(values.size()) + ", need p(" + std::to_string(n) + ")");
  return values[n];
}

std::uint64_t table_ceiling() {
  std::uint64_t c = g_ceiling.load();
  if (c == 0) {
    c = env_ceiling();
    std::uint64_t expected = 0;
    if (!g_ceiling.compare_exchange_strong(expected, c)) c = expected;
  }
  return c;
}

void set_table_ceiling(std::uint64_t n) { g_ceiling.store(n == 0 ? 1 : n); }

void extend_table(PartitionTable& t, std::uint64_t new_limit) {
  const std::uint64_t old = t.values.size();
  if (new_limit <= old) return;
  if (new_limit > table_ceiling())
    throw ResourceLimit("partition table limit " + std::to_string(new_limit) +
                        " exceeds ceiling " + std::to_string(table_ceiling()));
  t.values.resize(new_limit);
  const auto offs = pentagonal(new_limit);
  const auto m = static_cast<std::uint32_t>(t.modulus);
  // |accumulator| <= (#offsets + 1) * (m - 1); pick the narrowest safe lane
  const unsigned __int128 bound = static_cast<unsigned __int128>(offs.size() + 2) * m;
  if (bound < (1u << 31))
    fill<std::int32_t>(t.values, old, new_limit, m, offs);
  else
    fill<std::int64_t>(t.values, old, new_limit, m, offs);
}

PartitionTable build_table(std::uint64_t limit, std::uint64_t modulus) {
  if (limit < 1) throw std::invalid_argument("build_table: limit must be >= 1");
  if (modulus < 2 || modulus >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("build_table: modulus must lie in [2, 2^32)");
  PartitionTable t;
  t.modulus = modulus;
  extend_table(t, limit);
  return t;
}

std::shared_ptr<const PartitionTable> table_for(std::uint64_t modulus, std::uint64_t min_limit) {
  const std::uint64_t ceil = table_ceiling();
  if (min_limit > ceil)
    throw TableShortfall("need partition table to " + std::to_string(min_limit) +
                         " but ceiling is " + std::to_string(ceil));
  std::lock_guard lock(g_mu);
  auto& slot = g_cache[modulus];
  if (slot && slot->limit() >= min_limit) return slot;
  const std::uint64_t have = slot ? slot->limit() : 0;
  std::uint64_t target = std::max<std::uint64_t>({min_limit, 2 * have, 1 << 14});
  target = std::min(target, ceil);
  auto fresh = std::make_shared<PartitionTable>();
  if (slot) {
    *fresh = *slot;
  } else {
    fresh->modulus = modulus;
    if (modulus < 2 || modulus >= (std::uint64_t{1} << 32))
      throw std::invalid_argument("table_for: modulus must lie in [2, 2^32)");
  }
  extend_table(*fresh, target);
  slot = fresh;
  return slot;
}

void clear_cache() {
  std::lock_guard lock(g_mu);
  g_cache.clear();
}

std::uint32_t p_shifted(std::int64_t n, const PartitionTable& t) {
  if (n < -1) return 0;
  if ((n + 1) % 24 != 0) return 0;
  return t.at((n + 1) / 24);
}

}  // namespace partcong::partition
