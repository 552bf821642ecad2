#ifndef CAMON_CACHE_HPP_
#define CAMON_CACHE_HPP_

#include <optional>
#include <string>

#include "camon/ca.hpp"

namespace camon {

/// File name under `dir` for the monoid keyed by (group hash, alphabet).
std::string monoid_cache_path(const std::string& dir, const FiniteGroup& g,
                              int q);

/// Persists unit indices and the composition table; element tables are
/// regenerated from the rule codes on load.  A payload hash guards against
/// corruption.
void save_ca_monoid(const std::string& dir, const CAMonoid& monoid);
std::optional<CAMonoid> load_ca_monoid(const std::string& dir,
                                       const FiniteGroup& g, int q);

/// enumerate_end with a read-through cache; `dir` may be empty.
CAMonoid load_or_enumerate_end(const std::string& dir, const FiniteGroup& g,
                               int q, const EndBudget& budget = {},
                               int workers = 1);

}  // namespace camon

#endif  // CAMON_CACHE_HPP_
