#pragma once

// Desk-scale reproduction bundles. Each criterion runner returns one verdict
// line plus a free-form breakdown; the acceptance binary and `repro` share them.

#include <iosfwd>
#include <string>
#include <vector>

namespace partcong::repro {

struct Options {
  unsigned threads = 0;      // 0: hardware concurrency
  bool deep = true;          // criterion 5: include the Q_max = 10^8 run
  std::ostream* log = nullptr;  // progress lines, if set
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool unresolved = false;  // failed on an unresolved or unexpected-survivor outcome
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0;
};

constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, const Options& opt = {});

/// Criterion ids of a named profile; throws std::invalid_argument for unknown names.
std::vector<int> profile(const std::string& name);
std::vector<std::string> profile_names();

/// One line: "criterion N: PASS|FAIL title (summary) [seconds]".
std::string format_line(const CriterionResult& r);

}  // namespace partcong::repro
