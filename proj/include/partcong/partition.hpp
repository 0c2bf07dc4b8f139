#pragma once

// p(n) modulo m by Euler's pentagonal recurrence.

#include <cstdint>
#include <memory>
#include <vector>

namespace partcong::partition {

/// p(0), ..., p(limit-1) reduced mod `modulus`. Immutable once shared.
struct PartitionTable {
  std::uint64_t modulus = 0;
  std::vector<std::uint32_t> values;

  std::uint64_t limit() const { return values.size(); }
  /// Throws TableShortfall if n is outside the table; p(n) = 0 for n < 0.
  std::uint32_t at(std::int64_t n) const;
};

/// Largest table the library will build. Default 4,000,000; the environment
/// variable PARTCONG_TABLE_CEILING overrides it at first use.
std::uint64_t table_ceiling();
void set_table_ceiling(std::uint64_t n);

/// Builds a fresh table. Requires limit >= 1 and 2 <= modulus < 2^32.
/// Throws ResourceLimit when limit exceeds table_ceiling().
PartitionTable build_table(std::uint64_t limit, std::uint64_t modulus);

/// Extends `t` in place so that t.limit() >= new_limit.
void extend_table(PartitionTable& t, std::uint64_t new_limit);

/// Process-wide memoized table for `modulus` covering at least min_limit.
/// Grows geometrically up to the ceiling; throws TableShortfall beyond it.
std::shared_ptr<const PartitionTable> table_for(std::uint64_t modulus, std::uint64_t min_limit);

/// Drops every memoized table (tests use this to control memory).
void clear_cache();

/// p((n+1)/24) when 24 | n+1 and n >= -1, else 0.
std::uint32_t p_shifted(std::int64_t n, const PartitionTable& t);

}  // namespace partcong::partition
