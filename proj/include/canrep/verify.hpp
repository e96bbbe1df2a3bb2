#pragma once

#include <string>
#include <vector>

namespace canrep {

// Outcome of one verification check: a stable id, a pass flag, a one-line
// detail (counts on success, the first counterexample on failure), and the
// wall time. Checks with a stated time budget fail when they exceed it.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

const std::vector<int>& all_check_ids();
std::string check_name(int id);

// Runs one check. The suite is pinned to the wild weight triple (2,3,7)
// with the normalized parameters. cli_path names the command line binary and
// is only consulted by the file-format check, which exercises exit codes
// through a subprocess; pass the running binary's own path there.
CheckResult run_check(int id, const std::string& cli_path);

// Formats one result the way the suite prints it.
std::string format_check_line(const CheckResult& r);

}  // namespace canrep
