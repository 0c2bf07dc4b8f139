#include "partcong/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "partcong/nt_kernel.hpp"
#include "partcong/partition.hpp"

namespace partcong::sieve {

namespace {

using u128 = unsigned __int128;

void validate(u64 ell, int delta) {
  if (ell < 5 || !nt::is_prime(ell)) throw std::invalid_argument("sieve: ell must be a prime >= 5");
  if (delta != 0 && delta != -1) throw std::invalid_argument("sieve: delta must be 0 or -1");
}

// (p/Q) for an odd prime Q with Q = r (mod p) and Q = u (mod 4), by reciprocity.
int symbol_from_class(u64 p, u64 r, u64 u) {
  const int base = nt::jacobi(static_cast<i64>(r), static_cast<i64>(p));
  if (base == 0) return 0;
  const bool flip = (p % 4 == 3) && (u % 4 == 3);
  return flip ? -base : base;
}

std::string config_line(const SieveConfig& c, u64 stride, const std::vector<u64>& P) {
  std::ostringstream os;
  os << "# sieve ell=" << c.ell << " delta=" << c.delta << " qmax=" << c.Q_max << " stride=" << stride
     << " witnesses=" << c.witness_count << " scan=" << c.scan_limit << " P=";
  for (std::size_t i = 0; i < P.size(); ++i) os << (i ? "," : "") << P[i];
  return os.str();
}

struct Done {
  std::set<std::pair<int, u64>> units;
  std::vector<u64> survivors;
  bool sealed = false;
};

Done load_checkpoint(const std::string& path, const std::string& header) {
  Done d;
  std::ifstream in(path);
  if (!in) return d;
  std::string line;
  if (!std::getline(in, line)) return d;
  if (line != header)
    throw std::runtime_error("checkpoint " + path + " was written for a different configuration");
  while (std::getline(in, line)) {
    if (line == "DONE") {
      d.sealed = true;
      continue;
    }
    std::istringstream ls(line);
    int eps;
    u64 idx, last;
    if (!(ls >> eps >> idx >> last)) continue;  // a torn final line from an interrupted run
    d.units.emplace(eps, idx);
    u64 q;
    while (ls >> q) d.survivors.push_back(q);
  }
  return d;
}

}  // namespace

u64 default_scan_limit(u64 ell, std::size_t count) {
  return 4 * ell * static_cast<u64>(count) + 2000;
}

std::vector<Witness> build_B(u64 ell, int delta, std::size_t count, u64 scan_limit) {
  validate(ell, delta);
  std::vector<Witness> out;
  if (count == 0 || scan_limit <= 1) return out;
  const auto table = partition::table_for(ell, scan_limit);
  const auto L = static_cast<i64>(ell);
  for (i64 beta = 1; beta < static_cast<i64>(scan_limit) && out.size() < count; ++beta) {
    // the sign of the Radu class, not ((24 beta - 1)/ell)
    if (nt::jacobi(1 - 24 * beta, L) != delta) continue;
    if (table->values[static_cast<std::size_t>(beta)] == 0) continue;
    const i64 m = 24 * beta - 1;
    out.push_back({static_cast<u64>(delta == 0 ? m / L : m), beta});
  }
  return out;
}

Residues allowed_residues(u64 p, int eps) {
  if (p == 2 || !nt::is_prime(p)) throw std::invalid_argument("allowed_residues: p must be an odd prime");
  if (eps != 1 && eps != -1) throw std::invalid_argument("allowed_residues: eps must be +1 or -1");
  Residues out;
  if (p % 4 == 1) {
    out.modulus = p;
    for (u64 r = 0; r < p; ++r)
      if (symbol_from_class(p, r, 1) != eps) out.classes.push_back(r);
    return out;
  }
  out.modulus = 4 * p;
  for (u64 r = 0; r < 4 * p; ++r) {
    if ((r & 1) == 0) continue;
    if (symbol_from_class(p, r % p, r % 4) != eps) out.classes.push_back(r);
  }
  return out;
}

bool survives(u64 Q, const std::vector<Witness>& N, std::pair<u64, u64>* witness) {
  u64 plus = 0, minus = 0;
  bool has_plus = false, has_minus = false;
  const auto q = static_cast<i64>(Q);
  for (const auto& w : N) {
    const int s = nt::jacobi(static_cast<i64>(w.n % Q), q);
    if (s > 0 && !has_plus) {
      has_plus = true;
      plus = w.n;
    } else if (s < 0 && !has_minus) {
      has_minus = true;
      minus = w.n;
    }
    if (has_plus && has_minus) {
      if (witness) *witness = {plus, minus};
      return false;
    }
  }
  return true;
}

SieveReport run_sieve(const SieveConfig& cfg_in) {
  validate(cfg_in.ell, cfg_in.delta);
  if (cfg_in.witness_count == 0) throw std::invalid_argument("sieve: witness_count must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  SieveReport rep;
  rep.config = cfg_in;
  auto& cfg = rep.config;
  if (cfg.scan_limit == 0) cfg.scan_limit = default_scan_limit(cfg.ell, cfg.witness_count);
  if (cfg.Q_stride == 0) cfg.Q_stride = std::max<u64>(1, cfg.Q_max / 1000);
  const u64 stride = std::max<u64>(1, std::min(cfg.Q_stride, std::max<u64>(cfg.Q_max, 1)));
  if (cfg.Q_max >= 2) rep.out_of_domain.push_back(2);
  if (cfg.Q_max >= 3) rep.out_of_domain.push_back(3);

  rep.N = build_B(cfg.ell, cfg.delta, cfg.witness_count, cfg.scan_limit);
  const auto finish = [&] {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };
  if (rep.N.empty()) {
    rep.all_primes_survive = true;
    return finish();
  }
  if (cfg.Q_max < 5) return finish();

  std::set<u64> found;
  // Small primes go through the plain per-prime test as well.
  for (u64 Q : nt::primes_in(5, std::min(cfg.Q_max, cfg.direct_below - 1))) {
    std::pair<u64, u64> w;
    if (survives(Q, rep.N, &w)) found.insert(Q);
    else rep.witnesses[Q] = w;
  }

  // P: largest odd primes of N until their product reaches Q_max / Q_stride.
  std::vector<u64> cand;
  for (const auto& w : rep.N)
    if (w.n > 2 && nt::is_prime(w.n)) cand.push_back(w.n);
  std::sort(cand.begin(), cand.end(), std::greater<>());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  const u64 target = (cfg.Q_max + stride - 1) / stride;
  u128 prod = 1;
  for (u64 p : cand) {
    if (prod >= target) break;
    if (prod * p * 4 > (u128{1} << 62)) break;
    rep.P.push_back(p);
    prod *= p;
  }
  std::vector<Witness> rest;
  for (const auto& w : rep.N)
    if (std::find(rep.P.begin(), rep.P.end(), w.n) == rep.P.end()) rest.push_back(w);

  const u64 M = static_cast<u64>(prod) * 4;
  // CRT idempotents for the moduli 4 and p in P
  std::vector<u64> mods{4};
  for (u64 p : rep.P) mods.push_back(p);
  std::vector<u64> idem(mods.size());
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const u64 Mi = M / mods[i];
    idem[i] = static_cast<u64>(u128(Mi) * nt::mod_inv(static_cast<i64>(Mi % mods[i]), mods[i]) % M);
  }

  // Allowed classes mod p, split by Q mod 4.
  struct Layout {
    int eps;
    u64 u;
    std::vector<std::vector<u64>> cls;
    u64 count;
  };
  std::vector<Layout> layouts;
  for (int eps : {1, -1}) {
    for (u64 u : {u64{1}, u64{3}}) {
      Layout lay{eps, u, {}, 1};
      for (u64 p : rep.P) {
        std::vector<u64> c;
        for (u64 r = 0; r < p; ++r)
          if (symbol_from_class(p, r, u) != eps) c.push_back(r);
        lay.count *= c.size();
        lay.cls.push_back(std::move(c));
      }
      layouts.push_back(std::move(lay));
    }
  }
  // A work unit is (eps, tuple index); the tuple index runs over u = 1 then u = 3.
  // layouts are ordered eps = +1 (u = 1, 3) then eps = -1 (u = 1, 3).
  std::vector<u64> base(layouts.size() + 1, 0);
  for (std::size_t i = 0; i < layouts.size(); ++i) base[i + 1] = base[i] + layouts[i].count;
  const u64 total_units = base.back();
  struct Unit {
    int eps;
    u64 index;
    const Layout* lay;
    u64 local;
  };
  const auto unit_at = [&](u64 k) {
    std::size_t i = 0;
    while (base[i + 1] <= k) ++i;
    const u64 eps_base = i < 2 ? 0 : base[2];
    return Unit{layouts[i].eps, k - eps_base, &layouts[i], k - base[i]};
  };

  const std::string header = config_line(cfg, stride, rep.P);
  Done done;
  std::ofstream ck;
  std::mutex ck_mu;
  if (!cfg.checkpoint.empty()) {
    done = load_checkpoint(cfg.checkpoint, header);
    for (u64 q : done.survivors) found.insert(q);
    const bool fresh = done.units.empty() && !done.sealed;
    ck.open(cfg.checkpoint, fresh ? std::ios::trunc : std::ios::app);
    if (!ck) throw std::runtime_error("cannot open checkpoint " + cfg.checkpoint);
    if (fresh) ck << header << '\n' << std::flush;
  }

  std::atomic<u64> next{0};
  std::mutex mu;
  std::atomic<u64> scanned{0}, tested{0}, resumed{0};
  const auto worker = [&] {
    std::vector<u64> local;
    u64 my_scanned = 0;
    for (;;) {
      const u64 k = next.fetch_add(1);
      if (k >= total_units) break;
      const Unit unit = unit_at(k);
      if (done.units.count({unit.eps, unit.index})) {
        resumed.fetch_add(1);
        continue;
      }
      tested.fetch_add(1);
      u128 R = u128(unit.lay->u) * idem[0];
      u64 rem = unit.local;
      for (std::size_t j = 0; j < rep.P.size(); ++j) {
        const auto& c = unit.lay->cls[j];
        R += u128(c[rem % c.size()]) * idem[j + 1];
        rem /= c.size();
      }
      const u64 start = static_cast<u64>(R % M);
      std::vector<u64> unit_surv;
      u64 last = 0;
      for (u64 Q = start; Q <= cfg.Q_max; Q += M) {
        last = Q;
        if (Q < 5) continue;
        ++my_scanned;
        if (!nt::is_probable_prime(Q)) continue;
        bool ok = true;
        const auto q = static_cast<i64>(Q);
        for (const auto& w : rest) {
          if (nt::jacobi(static_cast<i64>(w.n % Q), q) == unit.eps) {
            ok = false;
            break;
          }
        }
        if (ok && nt::is_prime(Q)) unit_surv.push_back(Q);
        if (M > cfg.Q_max) break;
      }
      local.insert(local.end(), unit_surv.begin(), unit_surv.end());
      if (ck.is_open()) {
        std::lock_guard lock(ck_mu);
        ck << unit.eps << ' ' << unit.index << ' ' << last;
        for (u64 q : unit_surv) ck << ' ' << q;
        ck << '\n' << std::flush;
      }
    }
    scanned.fetch_add(my_scanned);
    std::lock_guard lock(mu);
    found.insert(local.begin(), local.end());
  };
  const unsigned nthreads = std::max(1u, cfg.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (ck.is_open()) {
    if (!done.sealed) ck << "DONE\n";
    ck.close();
  }
  rep.survivors.assign(found.begin(), found.end());
  rep.tested_tuples = tested.load();
  rep.scanned_candidates = scanned.load();
  rep.resumed_units = resumed.load();
  return finish();
}

SieveReport refine_survivors(const SieveReport& report, u64 ell, int delta, std::size_t extra_count) {
  SieveReport out = report;
  out.flagged.clear();
  if (report.survivors.empty() || report.all_primes_survive) return out;
  const std::size_t total = report.N.size() + extra_count;
  const u64 scan = std::max(report.config.scan_limit, default_scan_limit(ell, total));
  const auto N = build_B(ell, delta, total, std::min(scan, partition::table_ceiling()));
  std::vector<u64> keep;
  for (u64 Q : report.survivors) {
    std::pair<u64, u64> w;
    if (survives(Q, N, &w)) {
      keep.push_back(Q);
    } else {
      out.witnesses[Q] = w;
    }
  }
  out.survivors = keep;
  out.flagged = keep;
  out.N = N;
  return out;
}

std::vector<u64> unexpected_survivors(const SieveReport& report) {
  std::vector<u64> out;
  for (u64 Q : report.survivors) {
    if (Q == 5 || Q == 7 || Q == 11 || Q == report.config.ell) continue;
    out.push_back(Q);
  }
  return out;
}

}  // namespace partcong::sieve
