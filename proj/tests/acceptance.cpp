// Acceptance suite: runs every verification check with default budgets and
// prints one pass/fail line per check.  Exit code is the failure count.

#include <cstdio>
#include <iostream>

#include "camon/verify.hpp"

int main() {
  camon::RunConfig cfg;
  const std::vector<camon::VerificationReport> reports =
      camon::run_verification_suite(cfg);

  for (const camon::VerificationReport& r : reports) {
    std::printf("[%s] %-14s %s  (%.3fs)\n", r.id.c_str(),
                r.status == "pass"   ? "PASS"
                : r.status == "fail" ? "FAIL"
                                     : "SKIPPED-BUDGET",
                r.claim.c_str(), r.seconds);
    if (r.status != "pass") std::cout << "  " << r.values.dump(2) << "\n";
  }
  const int failures = camon::count_failures(reports);
  std::printf("%d of %zu checks failed\n", failures, reports.size());
  return failures;
}
