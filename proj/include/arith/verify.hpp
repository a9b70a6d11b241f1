#pragma once

#include <string>
#include <vector>

namespace arith {

struct VerifyOptions {
  long max_path = 12;
  long max_cycle = 8;
  std::string only;             // substring filter on check names
  int threads = 0;              // 0: ARITH_THREADS or hardware concurrency
  bool inject_failure = false;  // adds a deliberately corrupted structure
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // diagnostic on failure
  double seconds = 0.0;
};

std::vector<std::string> verification_check_names(const VerifyOptions& options);

/// Runs the theorem suite on a worker pool; results come back in fixed
/// registry order regardless of scheduling.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace arith
