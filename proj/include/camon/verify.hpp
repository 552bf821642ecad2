#ifndef CAMON_VERIFY_HPP_
#define CAMON_VERIFY_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "camon/config.hpp"

namespace camon {

using Json = nlohmann::ordered_json;

/// Outcome of one verification check: computed values plus the statement it
/// checked.  Failures carry the offending values in `values`.
struct VerificationReport {
  std::string id;
  std::string claim;
  std::string anchor;  // mathematical statement being exercised
  std::string status;  // "pass" | "fail" | "skipped-budget"
  Json values;
  double seconds = 0.0;
};

/// Runs every check in the fixed order A1..A10; deterministic for a fixed
/// config and seed.
std::vector<VerificationReport> run_verification_suite(const RunConfig& cfg);

Json reports_to_json(const std::vector<VerificationReport>& reports,
                     bool timings);
std::string reports_to_markdown(const std::vector<VerificationReport>& reports);
int count_failures(const std::vector<VerificationReport>& reports);

}  // namespace camon

#endif  // CAMON_VERIFY_HPP_
