#pragma once
// Invariant suites behind the `verify` command.  Each check pins one
// identity or cross-representation equality over a range of n, evaluates it
// exactly, and keeps a few lhs/rhs samples when it fails.

#include <string>
#include <vector>

namespace tiedarcs {

struct CheckResult {
  std::string name;
  int n_lo = 0, n_hi = 0;
  bool pass = true;
  std::vector<std::string> failures;  // e.g. "n=3: lhs=10 rhs=11" (first few)
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  int max_n = 0;  // 0 = per-check defaults
  std::vector<CheckResult> checks;
  bool all_pass() const;
  // stdout form; timings are excluded so identical invocations byte-match
  // (elapsed_ms is reported separately on stderr by the CLI).
  std::string to_json() const;
};

// suite: one of triangles | fuss | tb | ta | all.
// max_n <= 0 means each check runs over its own default range; otherwise
// max_n caps/sets the n upper bound of every check in the suite.
// parallel runs the checks in worker threads; the report order is fixed
// either way.  Throws std::invalid_argument on an unknown suite name.
VerificationReport run_suite(const std::string& suite, int max_n,
                             bool parallel);

}  // namespace tiedarcs
