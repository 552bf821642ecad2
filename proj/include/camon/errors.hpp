#ifndef CAMON_ERRORS_HPP_
#define CAMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace camon {

// Raised when an exact computation would exceed its configured budget
// (enumeration sizes, closure steps, table cells).  Callers may retry with a
// larger budget or fall back to closure-based answers.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed textual input (tables, field specs, rule strings).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace camon

#endif  // CAMON_ERRORS_HPP_
