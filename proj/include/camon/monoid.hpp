#ifndef CAMON_MONOID_HPP_
#define CAMON_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace camon {

/// An abstract finite monoid given by its composition table.
struct FiniteMonoid {
  int size = 0;
  std::vector<std::int32_t> op;  // row-major, op[a * size + b] = a*b
  int identity = 0;
  std::string label;

  int at(int a, int b) const {
    return op[static_cast<std::size_t>(a) * size + b];
  }

  /// Locates the identity and checks associativity (exhaustively up to
  /// size 512, on seeded random triples above).  Throws ParseError.
  static FiniteMonoid from_table(int size, std::vector<std::int32_t> op,
                                 std::string label);
};

struct UnitSets {
  std::vector<int> left;   // elements with a left inverse
  std::vector<int> right;  // elements with a right inverse
  std::vector<int> units;  // both
};

/// One pass over all pairs; also asserts that whenever an element has both a
/// left and a right inverse they coincide.
UnitSets classify_units(const FiniteMonoid& m);

struct DirectFiniteness {
  bool directly_finite = true;
  std::optional<std::pair<int, int>> counterexample;  // ab=1 but ba!=1
};
DirectFiniteness is_directly_finite(const FiniteMonoid& m);

struct LeMonoidsReport {
  bool left_units_are_units = false;
  bool right_units_are_units = false;
  bool nonunits_form_ideal = false;
  bool directly_finite = false;
  bool all_ok = false;
};
/// Checks the four equivalent one-sided-unit conditions simultaneously.
LeMonoidsReport verify_le_monoids(const FiniteMonoid& m);

/// Membership vector of the submonoid generated by `gens` (always contains
/// the identity).  `steps`, when given, accumulates table lookups.
std::vector<char> closure_set(const FiniteMonoid& m, std::span<const int> gens,
                              long* steps = nullptr);
bool generates(const FiniteMonoid& m, std::span<const int> gens);

struct SearchBudget {
  long max_steps = 10'000'000;
};

struct RankResult {
  std::optional<int> rank;  // empty when the budget ran out
  int lower_bound = 0;
  int upper_bound = 0;
  std::vector<int> witness;  // minimal generating set, lexicographically least
  long steps = 0;
  double seconds = 0.0;
  bool exact() const { return rank.has_value(); }
};

/// Exact minimum generating set size via iterative-deepening subset search.
/// Elements that are not a product of two non-identity elements are forced
/// into every generating set and prune the search.
RankResult rank(const FiniteMonoid& m, SearchBudget budget = {});

/// Minimum |W| with <base ∪ W> = M; candidates are restricted to the
/// complement of <base>.
RankResult relative_rank(const FiniteMonoid& m, std::span<const int> base,
                         SearchBudget budget = {});

struct RankFormulaReport {
  RankResult whole;     // Rank(M)
  RankResult units;     // Rank(U) as a monoid
  RankResult relative;  // Rank(M : U)
  bool all_exact = false;
  bool equality = false;  // Rank(M) == Rank(U) + Rank(M:U)
};
RankFormulaReport verify_rank_formula(const FiniteMonoid& m,
                                      SearchBudget budget = {});

struct EpiBoundsReport {
  bool homomorphism = false;
  bool surjective = false;
  bool units_to_units = false;
  RankResult rank_source, rank_image;
  RankResult rel_source, rel_image;
  bool rank_bound_ok = false;  // Rank(M2) <= Rank(M1)
  bool rel_bound_ok = false;   // Rank(M2:U2) <= Rank(M1:U1)
  bool all_exact = false;
};
/// Verifies that `phi` (element index map) is a monoid epimorphism and that
/// ranks and relative ranks do not grow along it.
EpiBoundsReport epimorphism_rank_bounds(const FiniteMonoid& m1,
                                        const FiniteMonoid& m2,
                                        std::span<const int> phi,
                                        SearchBudget budget = {});

/// All self-maps of {0..n-1} under composition, coded base n.
FiniteMonoid full_transformation_monoid(int n);

/// The group of units of `m` as a standalone table.  `unit_elements`, when
/// given, receives the original index of each unit-group element.
FiniteMonoid unit_group_monoid(const FiniteMonoid& m,
                               std::vector<int>* unit_elements = nullptr);

bool is_commutative(const FiniteMonoid& m);

/// Invariant factors d_1 | d_2 | ... of a finite abelian group table.
std::vector<long> abelian_invariant_factors(const FiniteMonoid& group);

/// Minimum generator count of ⊕ Z_{orders[i]}: the maximum, over primes l,
/// of the number of orders divisible by l (orders of 1 drop out).
int abelian_group_rank(const std::vector<long>& cyclic_orders);

std::string to_table_text(const FiniteMonoid& m);
FiniteMonoid monoid_from_table_text(std::string_view text,
                                    std::string label = "imported");

}  // namespace camon

#endif  // CAMON_MONOID_HPP_
