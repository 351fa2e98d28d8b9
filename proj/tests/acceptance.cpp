// Acceptance suite: one line per criterion, exit 0 iff every criterion holds.
//
//   acceptance                 run all ten criteria
//   acceptance --criterion K   run criterion K alone
//
// Criteria 1 and 2 carry wall-clock budgets (5 s and 10 s).  Criterion 10's
// pointwise part is conjecture support: it is reported but cannot fail the
// run; the p0 value itself must match.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "ellmean/checks.hpp"

namespace {

using ellmean::checks::CheckParams;
using ellmean::checks::CheckResult;

const char* criterion_title(int c) {
  switch (c) {
    case 1: return "endpoint constants of F and G";
    case 2: return "table 1/2 max-error reproduction";
    case 3: return "leading-order fits vs the tabulated pairs";
    case 4: return "exact rational ledger";
    case 5: return "proof-skeleton numerics";
    case 6: return "monotonicity suite";
    case 7: return "inequality chains";
    case 8: return "crossing certificates";
    case 9: return "oracle agreement";
    case 10: return "conjecture explorer";
  }
  return "?";
}

double budget_seconds(int c) {
  if (c == 1) return 5.0;
  if (c == 2) return 10.0;
  return 0.0;  // no stated budget
}

bool run_one(int c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckResult> results =
      ellmean::checks::run_criterion(c, CheckParams::full());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::string failures;
  for (const CheckResult& r : results) {
    if (!r.pass && r.fatal) {
      if (!failures.empty()) failures += "; ";
      failures += r.name;
      if (!r.detail.empty()) failures += " [" + r.detail + "]";
    }
  }
  const double budget = budget_seconds(c);
  const bool in_budget = budget == 0.0 || elapsed <= budget;
  const bool pass = failures.empty() && in_budget;

  std::printf("%s criterion %d (%s) [%.2fs]", pass ? "PASS" : "FAIL", c,
              criterion_title(c), elapsed);
  if (!failures.empty()) std::printf(": %s", failures.c_str());
  if (!in_budget) std::printf(": %.0fs budget exceeded", budget);
  std::printf("\n");

  for (const CheckResult& r : results)
    if (!r.pass && !r.fatal)
      std::printf("  note (non-fatal): %s %s\n", r.name.c_str(), r.detail.c_str());
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);
  if (argc != 1 && only == 0) {
    std::fprintf(stderr, "usage: %s [--criterion 1..10]\n", argv[0]);
    return 2;
  }

  bool all_pass = true;
  if (only != 0) {
    all_pass = run_one(only);
  } else {
    for (int c = 1; c <= 10; ++c) all_pass = run_one(c) && all_pass;
  }
  return all_pass ? 0 : 1;
}
