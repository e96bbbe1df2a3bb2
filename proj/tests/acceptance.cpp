#include "canrep/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

// Runs the acceptance checks outside the unit suite, one per ctest entry.
// A failing check prints its counterexample and exits nonzero; it is not
// masked. Usage: acceptance [--check N] [--cli PATH]; the CLI binary may
// also be named through the CANREP_CLI environment variable.
int main(int argc, char** argv) {
  int only = 0;
  std::string cli;
  if (const char* env = std::getenv("CANREP_CLI")) cli = env;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--check") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
      cli = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--check N] [--cli PATH]\n", argv[0]);
      return 2;
    }
  }

  std::vector<int> ids;
  if (only > 0) {
    ids.push_back(only);
  } else {
    ids = canrep::all_check_ids();
  }

  bool all_pass = true;
  for (int id : ids) {
    const canrep::CheckResult r = canrep::run_check(id, cli);
    std::printf("%s\n", canrep::format_check_line(r).c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
