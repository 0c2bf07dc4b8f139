#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "partcong/errors.hpp"
#include "partcong/nt_kernel.hpp"
#include "partcong/partition.hpp"
#include "partcong/qseries.hpp"
#include "partcong/repro.hpp"

namespace partcong::cli {

using nlohmann::json;
using i64 = std::int64_t;
using u64 = std::uint64_t;

namespace {

verify::Condition condition_from(const std::string& s) {
  using verify::Condition;
  for (auto c : {Condition::HeckeIdentity, Condition::UQVQ, Condition::SquarefreeAnnihilator,
                 Condition::QuadConditionOne, Condition::QuadConditionTwo, Condition::ShimuraCommutation})
    if (s == verify::to_string(c)) return c;
  throw std::invalid_argument("unknown condition '" + s + "'");
}

verify::Status status_from(const std::string& s) {
  using verify::Status;
  for (auto st : {Status::Falsified, Status::ConsistentUpTo, Status::TriviallyConsistent})
    if (s == verify::to_string(st)) return st;
  throw std::invalid_argument("unknown status '" + s + "'");
}

json case_json(const verify::CaseReport& c) {
  json checks = json::array();
  for (const auto& r : c.checks) checks.push_back(to_json(r));
  return {{"verdict", verify::to_string(c.verdict)}, {"method", c.method}, {"checks", checks}};
}

unsigned default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

}  // namespace

json to_json(const verify::FalsificationResult& r) {
  return {{"condition", verify::to_string(r.condition)},
          {"status", verify::to_string(r.status)},
          {"witness", r.witness},
          {"witnesses", r.witnesses},
          {"bound", r.bound},
          {"reason", r.reason},
          {"ell", r.ell},
          {"Q", r.Q},
          {"Qs", r.Qs},
          {"delta", r.delta},
          {"epsilon", r.epsilon},
          {"notes", r.notes}};
}

verify::FalsificationResult result_from_json(const json& j) {
  verify::FalsificationResult r;
  r.condition = condition_from(j.at("condition").get<std::string>());
  r.status = status_from(j.at("status").get<std::string>());
  j.at("witness").get_to(r.witness);
  j.at("witnesses").get_to(r.witnesses);
  j.at("bound").get_to(r.bound);
  j.at("reason").get_to(r.reason);
  j.at("ell").get_to(r.ell);
  j.at("Q").get_to(r.Q);
  j.at("Qs").get_to(r.Qs);
  j.at("delta").get_to(r.delta);
  j.at("epsilon").get_to(r.epsilon);
  j.at("notes").get_to(r.notes);
  return r;
}

json to_json(const verify::QuadReport& r) {
  json per = json::array();
  for (const auto& d : r.per_delta)
    per.push_back({{"delta", d.delta},
                   {"verdict", verify::to_string(d.verdict)},
                   {"surviving", d.surviving},
                   {"case1", case_json(d.case1)},
                   {"case2", case_json(d.case2)},
                   {"case3", case_json(d.case3)}});
  return {{"ell", r.ell}, {"Q", r.Q}, {"per_delta", per}};
}

json to_json(const sieve::SieveReport& r) {
  json w = json::object();
  for (const auto& [Q, pr] : r.witnesses) w[std::to_string(Q)] = {pr.first, pr.second};
  json ns = json::array();
  for (const auto& x : r.N) ns.push_back({{"n", x.n}, {"beta", x.beta}});
  const auto& c = r.config;
  return {{"config",
           {{"ell", c.ell},
            {"delta", c.delta},
            {"Q_max", c.Q_max},
            {"Q_stride", c.Q_stride},
            {"witness_count", c.witness_count},
            {"scan_limit", c.scan_limit},
            {"threads", c.threads},
            {"checkpoint", c.checkpoint}}},
          {"all_primes_survive", r.all_primes_survive},
          {"survivors", r.survivors},
          {"flagged", r.flagged},
          {"unexpected", sieve::unexpected_survivors(r)},
          {"out_of_domain", r.out_of_domain},
          {"witnesses", w},
          {"N", ns},
          {"P", r.P},
          {"tested_tuples", r.tested_tuples},
          {"scanned_candidates", r.scanned_candidates},
          {"resumed_units", r.resumed_units},
          {"seconds", r.seconds}};
}

json to_json(const cyclo::CycloVector& v) { return {{"c", v.c}, {"counts", v.counts}}; }

json to_json(const RunManifest& m) {
  return {{"subcommand", m.subcommand}, {"parameters", m.parameters}, {"version", m.version},
          {"wall_seconds", m.wall_seconds}, {"outcome", m.outcome}, {"exit_code", m.exit_code},
          {"outputs", m.outputs}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition congruence search and verification", "partcong"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", PARTCONG_VERSION);
  std::string report_path;
  app.add_option("--report", report_path, "Write the JSON result here (a manifest lands beside it)");

  RunManifest manifest;
  manifest.version = PARTCONG_VERSION;
  json result;  // what --report receives
  int code = kExpected;

  // partition
  auto* c_part = app.add_subcommand("partition", "p(n) mod m");
  i64 part_n = 0;
  u64 part_mod = 0;
  c_part->add_option("n", part_n)->required();
  c_part->add_option("--mod", part_mod, "Modulus")->required()->check(CLI::Range(u64{2}, u64{0xFFFFFFFFull}));

  // series
  auto* c_series = app.add_subcommand("series", "Coefficients of eta^r, f_{ell,delta} or F_ell as TSV");
  u64 s_ell = 13;
  i64 s_N = 24 * 20;
  i64 s_eta = 0;
  int s_delta = 0;
  bool s_F = false;
  std::string s_ops;
  c_series->add_option("--ell", s_ell, "Prime modulus")->required();
  c_series->add_option("--n", s_N, "Precision in units of q^(1/24)");
  auto* o_eta = c_series->add_option("--eta", s_eta, "Expand eta^R");
  auto* o_f = c_series->add_option("--f", s_delta, "Expand f_{ell,delta}, delta 0 or -1");
  auto* o_F = c_series->add_flag("--F", s_F, "Expand F_ell");
  o_eta->excludes(o_f)->excludes(o_F);
  o_f->excludes(o_F);
  c_series->add_option("--ops", s_ops, "Pipeline such as U5,V7,X11,T5 (U_m, V_m, twist, T_{Q^2})");

  // kloosterman
  auto* c_kl = app.add_subcommand("kloosterman", "K(a,b,c) as a count vector with its vanishing verdict");
  i64 k_a = 0, k_b = 0;
  u64 k_c = 1, k_ell = 0;
  bool k_json = false;
  c_kl->add_option("a", k_a)->required();
  c_kl->add_option("b", k_b)->required();
  c_kl->add_option("c", k_c)->required()->check(CLI::PositiveNumber);
  c_kl->add_option("--mod", k_ell, "Prime ell for the vanishing test")->required();
  c_kl->add_flag("--json", k_json);

  // sieve
  auto* c_sieve = app.add_subcommand("sieve", "Quadratic-residue sieve over primes Q");
  sieve::SieveConfig cfg;
  cfg.threads = default_threads();
  std::size_t refine = 200;
  bool sv_json = false;
  c_sieve->add_option("--ell", cfg.ell)->required();
  c_sieve->add_option("--delta", cfg.delta)->required()->check(CLI::IsMember({0, -1}));
  c_sieve->add_option("--qmax", cfg.Q_max)->required();
  c_sieve->add_option("--stride", cfg.Q_stride, "0: Q_max/1000");
  c_sieve->add_option("--witnesses", cfg.witness_count)->check(CLI::PositiveNumber);
  c_sieve->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  c_sieve->add_option("--checkpoint", cfg.checkpoint);
  c_sieve->add_option("--refine", refine, "Extra witnesses for surviving primes");
  c_sieve->add_flag("--json", sv_json);

  // verify-hecke
  auto* c_vh = app.add_subcommand("verify-hecke", "Falsify f|T_{Q^2} = 0 for Q = -1 (mod ell)");
  u64 vh_ell = 17;
  std::size_t vh_qcount = 3;
  i64 vh_nlimit = 5000;
  std::vector<int> vh_delta = {0, -1};
  c_vh->add_option("--ell", vh_ell)->required();
  c_vh->add_option("--qcount", vh_qcount);
  c_vh->add_option("--nlimit", vh_nlimit);
  c_vh->add_option("--delta", vh_delta)->check(CLI::IsMember({0, -1}));

  // verify-quad
  auto* c_vq = app.add_subcommand("verify-quad", "Rule out p(ell Q^2 n + beta) = 0 (mod ell)");
  u64 vq_ell = 17, vq_Q = 5;
  verify::QuadBudget budget;
  c_vq->add_option("--ell", vq_ell)->required();
  c_vq->add_option("--q", vq_Q)->required();
  c_vq->add_option("--cond-two-n", budget.cond_two_n);

  // verify-uqvq
  auto* c_vu = app.add_subcommand("verify-uqvq", "Compare f|U_Q with -eps (-12/Q) Q^-1 f|V_Q");
  u64 vu_ell = 17, vu_Q = 5;
  int vu_delta = 0, vu_eps = 1;
  i64 vu_N = 2400;
  c_vu->add_option("--ell", vu_ell)->required();
  c_vu->add_option("--delta", vu_delta)->required()->check(CLI::IsMember({0, -1}));
  c_vu->add_option("--q", vu_Q)->required();
  c_vu->add_option("--epsilon", vu_eps)->required()->check(CLI::IsMember({1, -1}));
  c_vu->add_option("--n", vu_N, "Compare exponents below this bound");

  // selftest and repro
  auto* c_self = app.add_subcommand("selftest", "Quick internal consistency checks");
  auto* c_repro = app.add_subcommand("repro", "Run a reproduction profile");
  std::string profile;
  unsigned rp_threads = 0;
  bool no_deep = false;
  c_repro->add_option("profile", profile)->required()->check(CLI::IsMember(repro::profile_names()));
  c_repro->add_option("--threads", rp_threads);
  c_repro->add_flag("--no-deep", no_deep, "Skip the Q_max = 10^8 sieve run");

  std::vector<const char*> argv;
  argv.push_back("partcong");
  for (const auto& a : args) argv.push_back(a.c_str());
  if (args.empty()) {
    err << app.help();
    return kError;
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExpected;
  } catch (const CLI::CallForVersion&) {
    out << PARTCONG_VERSION << '\n';
    return kExpected;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kError;
  }

  CLI::App* sub = app.get_subcommands().front();
  manifest.subcommand = sub->get_name();
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_name() == "--help") continue;
    const auto& res = o->results();
    std::string v;
    for (const auto& x : res) v += (v.empty() ? "" : ",") + x;
    if (res.empty()) v = o->get_default_str();
    if (v.empty()) continue;
    manifest.parameters[o->get_name(false, true)] = v;
  }
  const auto t0 = std::chrono::steady_clock::now();

  try {
    if (sub == c_part) {
      if (part_n > static_cast<i64>(partition::table_ceiling()))
        throw ResourceLimit("n exceeds the partition table ceiling " + std::to_string(partition::table_ceiling()));
      const auto t = partition::table_for(part_mod, static_cast<u64>(std::max<i64>(part_n, 0)) + 1);
      const u64 v = t->at(part_n);
      out << v << '\n';
      result = {{"n", part_n}, {"mod", part_mod}, {"value", v}};
      manifest.outcome = "p(" + std::to_string(part_n) + ") = " + std::to_string(v);
    } else if (sub == c_series) {
      qseries::EtaSeries f;
      if (*o_F) f = qseries::construct_F_ell(s_ell, s_N);
      else if (*o_f) f = qseries::f_ell_delta(s_ell, s_delta, s_N);
      else f = qseries::eta_power(s_eta, s_ell, s_N);
      std::stringstream ops(s_ops);
      std::string op;
      while (std::getline(ops, op, ',')) {
        if (op.size() < 2) throw std::invalid_argument("bad op '" + op + "'");
        const u64 m = std::stoull(op.substr(1));
        switch (op[0]) {
          case 'U': f = qseries::u_op(f, m); break;
          case 'V': f = qseries::v_op(f, m); break;
          case 'X': f = qseries::twist(f, m); break;
          case 'T': f = qseries::hecke_TQ2(f, m); break;
          default: throw std::invalid_argument("bad op '" + op + "'");
        }
      }
      json coeffs = json::array();
      for (i64 n = f.start; n < f.precision; n += 24) {
        out << n << '\t' << f.coeff(n) << '\n';
        coeffs.push_back({n, f.coeff(n)});
      }
      result = {{"ell", f.ell}, {"r", f.r}, {"weight2", f.weight2}, {"precision", f.precision}, {"coeffs", coeffs}};
      manifest.outcome = std::to_string(coeffs.size()) + " coefficients";
    } else if (sub == c_kl) {
      const auto v = cyclo::kloosterman(k_a, k_b, k_c);
      const auto verdict = cyclo::vanishes_mod_ell(v, k_ell);
      result = {{"vector", to_json(v)}, {"ell", k_ell}, {"verdict", cyclo::to_string(verdict)}};
      if (k_json) {
        out << result.dump() << '\n';
      } else {
        for (std::size_t e = 0; e < v.counts.size(); ++e)
          if (v.counts[e]) out << e << '\t' << v.counts[e] << '\n';
        out << "verdict\t" << cyclo::to_string(verdict) << '\n';
      }
      manifest.outcome = cyclo::to_string(verdict);
    } else if (sub == c_sieve) {
      auto rep = sieve::run_sieve(cfg);
      if (!rep.all_primes_survive) rep = sieve::refine_survivors(rep, cfg.ell, cfg.delta, refine);
      const auto unexpected = sieve::unexpected_survivors(rep);
      result = to_json(rep);
      if (sv_json) {
        out << result.dump(2) << '\n';
      } else if (rep.all_primes_survive) {
        out << "all primes survive (Ramanujan case)\n";
      } else {
        const auto list = [](const std::vector<u64>& v) {
          std::string s;
          for (u64 x : v) s += " " + std::to_string(x);
          return s.empty() ? std::string(" none") : s;
        };
        out << "survivors:" << list(rep.survivors) << '\n';
        out << "unexpected:" << list(unexpected) << '\n';
      }
      if (!cfg.checkpoint.empty()) manifest.outputs.push_back(cfg.checkpoint);
      code = unexpected.empty() ? kExpected : kInteresting;
      manifest.outcome = rep.all_primes_survive ? "all primes survive (Ramanujan case)"
                                                : std::to_string(rep.survivors.size()) + " survivors, " +
                                                      std::to_string(unexpected.size()) + " unexpected";
    } else if (sub == c_vh) {
      json arr = json::array();
      std::size_t open = 0, shortfall = 0;
      std::size_t found = 0;
      for (u64 Q = 2 * vh_ell - 1; found < vh_qcount; Q += vh_ell) {
        if (!nt::is_prime(Q)) continue;
        ++found;
        for (int d : vh_delta) {
          try {
            const auto r = verify::check_hecke_identity(vh_ell, d, Q, vh_nlimit);
            open += r.status == verify::Status::ConsistentUpTo;
            arr.push_back(to_json(r));
          } catch (const TableShortfall& e) {
            ++shortfall;
            err << "ell=" << vh_ell << " Q=" << Q << " delta=" << d << ": " << e.what() << '\n';
          }
        }
      }
      out << arr.dump(2) << '\n';
      result = arr;
      code = shortfall ? kError : (open ? kInteresting : kExpected);
      manifest.outcome = std::to_string(arr.size()) + " results, " + std::to_string(open) + " consistent, " +
                         std::to_string(shortfall) + " beyond the table ceiling";
    } else if (sub == c_vq) {
      const auto rep = verify::rule_out_quadratic(vq_ell, vq_Q, budget);
      json arr = json::array();
      for (const auto& d : rep.per_delta)
        for (const auto* c : {&d.case1, &d.case2, &d.case3})
          for (const auto& r : c->checks) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      result = to_json(rep);
      bool open = false;
      for (const auto& d : rep.per_delta) {
        err << "delta=" << d.delta << ": " << verify::to_string(d.verdict)
            << (d.surviving.empty() ? "" : " (" + d.surviving + ")") << '\n';
        open = open || d.verdict == verify::Verdict::Unresolved;
      }
      code = open ? kInteresting : kExpected;
      manifest.outcome = open ? "unresolved" : "ruled out";
    } else if (sub == c_vu) {
      const auto r = verify::check_uqvq(vu_ell, vu_delta, vu_Q, vu_eps, vu_N);
      json arr = json::array({to_json(r)});
      out << arr.dump(2) << '\n';
      result = arr;
      code = r.status == verify::Status::ConsistentUpTo ? kInteresting : kExpected;
      manifest.outcome = verify::to_string(r.status);
    } else if (sub == c_self || sub == c_repro) {
      repro::Options opt;
      opt.threads = rp_threads;
      opt.deep = !no_deep;
      opt.log = &err;
      const std::vector<int> ids = sub == c_self ? std::vector<int>{1, 2, 10} : repro::profile(profile);
      json arr = json::array();
      bool all = true, open = false;
      for (int id : ids) {
        const auto r = repro::run_criterion(id, opt);
        out << repro::format_line(r) << '\n';
        for (const auto& d : r.details) out << "    " << d << '\n';
        all = all && r.pass;
        open = open || r.unresolved;
        arr.push_back({{"criterion", id}, {"pass", r.pass}, {"summary", r.summary}, {"details", r.details},
                       {"seconds", r.seconds}});
      }
      result = arr;
      code = all ? kExpected : (open ? kInteresting : kError);
      manifest.outcome = all ? "all pass" : "failures";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kError;
    manifest.outcome = std::string("error: ") + e.what();
  }

  manifest.exit_code = code;
  manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << result.dump(2) << '\n';
    manifest.outputs.push_back(report_path);
    std::ofstream m(report_path + ".manifest.json");
    m << to_json(manifest).dump(2) << '\n';
    if (!f || !m) {
      err << "error: cannot write " << report_path << '\n';
      return kError;
    }
  } else {
    err << to_json(manifest).dump() << '\n';
  }
  return code;
}

}  // namespace partcong::cli
