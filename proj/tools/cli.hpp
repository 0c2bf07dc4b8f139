#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "partcong/cyclotomic.hpp"
#include "partcong/sieve.hpp"
#include "partcong/verifier.hpp"

namespace partcong::cli {

// Exit codes shared by every subcommand.
constexpr int kExpected = 0;
constexpr int kError = 1;
constexpr int kInteresting = 2;

nlohmann::json to_json(const verify::FalsificationResult& r);
verify::FalsificationResult result_from_json(const nlohmann::json& j);
nlohmann::json to_json(const verify::QuadReport& r);
nlohmann::json to_json(const sieve::SieveReport& r);
nlohmann::json to_json(const cyclo::CycloVector& v);

struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::string version;
  double wall_seconds = 0;
  std::string outcome;
  int exit_code = 0;
  std::vector<std::string> outputs;
};
nlohmann::json to_json(const RunManifest& m);

/// Runs the command line in-process. Results go to `out`, logs and the
/// manifest (unless a report path is given) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partcong::cli
