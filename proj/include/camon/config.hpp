#ifndef CAMON_CONFIG_HPP_
#define CAMON_CONFIG_HPP_

#include <cstdint>
#include <string>

namespace camon {

/// Budgets and output settings shared by the CLI and the verification
/// suite.  Identical configs (and seed) produce byte-identical reports.
struct RunConfig {
  std::int64_t monoid_budget = 1'000'000;   // End(A^G) enumeration cap
  std::int64_t table_budget = 10'000;       // composition-table cutoff
  long closure_budget = 10'000'000;         // rank-search steps
  std::uint64_t ring_budget = 1'000'000;    // group-ring unit scans
  std::string cache_dir;                    // empty disables caching
  std::string format = "markdown";          // "markdown" or "json"
  std::uint64_t seed = 12345;
  int workers = 1;
  bool timings = false;  // include wall-clock fields in JSON output

  /// Loads "key = value" lines; '#' starts a comment.
  static RunConfig from_file(const std::string& path);
  void apply_line(const std::string& line);
};

}  // namespace camon

#endif  // CAMON_CONFIG_HPP_
