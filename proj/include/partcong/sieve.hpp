#pragma once

// Quadratic-residue sieve over primes Q ruling out p(ell Q n + beta) = 0 (mod ell).
//
// A prime Q survives when some sign eps has (n/Q) != eps for every witness n.
// Survivors are enumerated along arithmetic progressions fixed by the Legendre
// symbols of a few large witness primes, then checked against the rest.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partcong::sieve {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct Witness {
  u64 n = 0;     // the integer fed to the Legendre symbols
  i64 beta = 0;  // the partition argument it came from
  bool operator==(const Witness&) const = default;
};

/// The first `count` witnesses, scanning beta = 1, 2, ... < scan_limit with
/// ((1 - 24 beta)/ell) = delta and p(beta) != 0 (mod ell).
/// delta = 0 gives n = (24 beta - 1)/ell, delta = -1 gives n = 24 beta - 1.
std::vector<Witness> build_B(u64 ell, int delta, std::size_t count, u64 scan_limit);

/// Default beta scan bound for `count` witnesses.
u64 default_scan_limit(u64 ell, std::size_t count);

struct Residues {
  u64 modulus = 0;  // p when p = 1 (mod 4), else 4p
  std::vector<u64> classes;
};
/// Classes of a prime Q modulo `modulus` for which (p/Q) != eps.
Residues allowed_residues(u64 p, int eps);

struct SieveConfig {
  u64 ell = 13;
  int delta = 0;
  u64 Q_max = 1'000'000;
  u64 Q_stride = 0;  // 0: Q_max / 1000
  std::size_t witness_count = 100;
  u64 scan_limit = 0;  // 0: default_scan_limit
  unsigned threads = 1;
  std::string checkpoint;  // empty: none
  u64 direct_below = 10'000;
};

struct SieveReport {
  SieveConfig config;
  bool all_primes_survive = false;  // the witness set is empty
  std::vector<u64> survivors;       // sorted primes Q >= 5
  std::vector<u64> flagged;         // survivors persisting refinement
  std::vector<u64> out_of_domain;   // 2 and 3 when within range
  /// Q -> (n with (n/Q) = +1, n with (n/Q) = -1) for excluded primes below direct_below.
  std::map<u64, std::pair<u64, u64>> witnesses;
  std::vector<Witness> N;
  std::vector<u64> P;
  u64 tested_tuples = 0;
  u64 scanned_candidates = 0;
  u64 resumed_units = 0;
  double seconds = 0;
};

SieveReport run_sieve(const SieveConfig& config);

/// Retests survivors against `extra_count` more witnesses; excluded ones are
/// dropped (keeping their witnesses), the rest land in `flagged`.
SieveReport refine_survivors(const SieveReport& report, u64 ell, int delta, std::size_t extra_count);

/// Survivors of `report` outside the allowed set {5, 7, 11, ell}.
std::vector<u64> unexpected_survivors(const SieveReport& report);

/// True when some eps has (n/Q) != eps for all n; fills a witness pair otherwise.
bool survives(u64 Q, const std::vector<Witness>& N, std::pair<u64, u64>* witness = nullptr);

}  // namespace partcong::sieve
