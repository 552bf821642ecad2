#ifndef CAMON_CA_HPP_
#define CAMON_CA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camon/group.hpp"
#include "camon/monoid.hpp"

namespace camon {

struct Alphabet {
  int size = 2;
  std::vector<std::string> labels;
};

/// The configuration space A^G for a finite group G and alphabet of size q.
/// A configuration x : G -> A is coded as an integer in [0, q^|G|) base q,
/// whose digit at position g is x(g).
struct ShiftSpace {
  const FiniteGroup* group = nullptr;
  int q = 2;
  std::int64_t config_count = 0;

  ShiftSpace(const FiniteGroup& g, int alphabet_size);

  int digit(std::int64_t code, Elem g) const {
    return static_cast<int>((code / pow_[g]) % q);
  }
  /// Code of the translate g.x, where (g.x)(h) = x(g^{-1} h).
  std::int64_t shift(Elem g, std::int64_t code) const;

  std::vector<std::int64_t> pow_;  // q^i for i in [0, |G|]
};

/// A cellular automaton over A^G with canonical memory set S = G, stored as
/// its local-rule table together with the induced global map on
/// configuration codes.  Injectivity and surjectivity are recorded at
/// construction (plain finite-map checks).
struct CellularAutomaton {
  const FiniteGroup* group = nullptr;
  int q = 2;
  std::vector<std::uint8_t> rule;    // config code -> symbol
  std::vector<std::int32_t> global;  // config code -> config code
  bool injective = false;
  bool surjective = false;

  bool unit() const { return injective && surjective; }
  /// Rule table read as an integer base q; doubles as the element index in a
  /// fully enumerated monoid.  Requires q^(q^|G|) to fit in 64 bits.
  std::uint64_t rule_code() const;
  bool same_rule(const CellularAutomaton& other) const {
    return rule == other.rule;
  }
};

/// Builds the CA with local rule mu: tau(x)(g) = mu(g^{-1}.x).
CellularAutomaton make_ca(const FiniteGroup& g, int q,
                          std::vector<std::uint8_t> rule);
CellularAutomaton identity_ca(const FiniteGroup& g, int q);
CellularAutomaton constant_ca(const FiniteGroup& g, int q, int symbol);
/// mu(x) = x(s); for s = identity this is the identity CA, and for cyclic G
/// these are the shift automata.
CellularAutomaton position_reader_ca(const FiniteGroup& g, int q, Elem s);

/// Function composition s after t; the local rule of the result is recovered
/// from the composed global map.
CellularAutomaton compose(const CellularAutomaton& s,
                          const CellularAutomaton& t);

std::vector<std::uint8_t> extract_rule(const ShiftSpace& space,
                                       const std::vector<std::int32_t>& global);
bool is_equivariant(const ShiftSpace& space,
                    const std::vector<std::int32_t>& global);

struct EndBudget {
  std::int64_t max_elements = 1'000'000;
  std::int64_t max_table_elements = 10'000;  // composition table cutoff
};

/// The fully enumerated monoid End(A^G): element i is the CA whose rule code
/// is i.  The composition table is filled when the monoid is small enough.
struct CAMonoid {
  const FiniteGroup* group = nullptr;
  int q = 2;
  std::vector<CellularAutomaton> elements;
  std::vector<std::uint32_t> unit_indices;
  std::vector<std::uint32_t> composition;  // empty, or elements^2 entries
  bool has_table() const { return !composition.empty(); }
  std::uint32_t compose_index(std::uint32_t a, std::uint32_t b) const;
  std::uint64_t identity_index() const;
};

CAMonoid enumerate_end(const FiniteGroup& g, int q, const EndBudget& budget = {},
                       int workers = 1);

/// Requires the composition table.
FiniteMonoid to_finite_monoid(const CAMonoid& monoid);

/// sigma with sigma.tau = id (left witness) or tau.sigma = id (right).
/// Searches the ambient monoid when given; otherwise constructs the inverse
/// global map directly (possible exactly when tau is bijective).
std::optional<CellularAutomaton> left_unit_witness(
    const CellularAutomaton& tau, const CAMonoid* ambient = nullptr);
std::optional<CellularAutomaton> right_unit_witness(
    const CellularAutomaton& tau, const CAMonoid* ambient = nullptr);

/// Configurations fixed by every element of the normal subgroup N; these are
/// exactly the configurations constant on cosets, in bijection with A^{G/N}.
std::vector<std::int64_t> fixed_configurations(const FiniteGroup& g,
                                               const Subgroup& n, int q);

/// The image of tau under the epimorphism End(A^G) -> End(A^{G/N}) given by
/// restriction to N-fixed configurations.
CellularAutomaton project_ca(const CellularAutomaton& tau,
                             const QuotientGroup& quo);

/// A section of project_ca: lifts a CA over A^{G/N} to A^G by reading each
/// coset at its chosen representative.  project_ca(lift_ca(s)) == s exactly.
CellularAutomaton lift_ca(const CellularAutomaton& s, const QuotientGroup& quo);

struct SurjunctivityReport {
  std::int64_t elements_checked = 0;
  bool full_monoid = true;  // false for closure-generated submonoid checks
  bool injective_iff_surjective = true;
  bool directly_finite = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
};
SurjunctivityReport surjunctivity_report(const CAMonoid& monoid);
/// The same checks over a composition-closed set of automata (the fallback
/// when End(A^G) is beyond the enumeration budget).
SurjunctivityReport surjunctivity_report(
    const std::vector<CellularAutomaton>& closed_set);

/// Closure of a CA set under composition, for monoids beyond the
/// enumeration budget.  Deterministic order of discovery.
std::vector<CellularAutomaton> ca_closure(std::vector<CellularAutomaton> gens,
                                          std::int64_t max_elements);

/// "<group-label> <q> <rule digits>"; q <= 10.
std::string ca_to_string(const CellularAutomaton& tau);
CellularAutomaton ca_from_string(const FiniteGroup& g, std::string_view text);

}  // namespace camon

#endif  // CAMON_CA_HPP_
