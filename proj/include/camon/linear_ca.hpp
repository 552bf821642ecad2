#ifndef CAMON_LINEAR_CA_HPP_
#define CAMON_LINEAR_CA_HPP_

#include <cstdint>
#include <vector>

#include "camon/ca.hpp"
#include "camon/gf_matrix.hpp"
#include "camon/group.hpp"
#include "camon/group_ring.hpp"
#include "camon/monoid.hpp"

namespace camon {

/// A linear cellular automaton over V^G, V = F_q^d, carried in two coupled
/// representations: the group-ring element sum A_s s (acting by
/// tau(x)(g) = sum_s A_s x(gs)) and the d|G| x d|G| matrix of that action in
/// the group-major basis of V^G.  Block (g, h) of the matrix is A_{g^-1 h}.
struct LinearCA {
  GroupRing::Element element;
  GfMatrix matrix;
};

GfMatrix linear_ca_matrix(const GroupRing& ring, const GroupRing::Element& a);
LinearCA linear_ca_from_groupring(const GroupRing& ring,
                                  const GroupRing::Element& a);
/// Inverse of linear_ca_matrix; reads the coefficient blocks back off.
GroupRing::Element groupring_from_matrix(const GroupRing& ring,
                                         const GfMatrix& m);

bool lin_is_injective(const GroupRing& ring, const LinearCA& t);
bool lin_is_surjective(const GroupRing& ring, const LinearCA& t);

/// The same map as a plain cellular automaton over the alphabet V coded
/// base q^d; its local rule is linear.
CellularAutomaton linear_ca_as_plain_ca(const GroupRing& ring,
                                        const GroupRing::Element& a);

/// The full multiplicative monoid of R[G] as an abstract table for the rank
/// machinery.  Element index = ring element code.
FiniteMonoid linear_monoid(const GroupRing& ring,
                           std::int64_t max_elements = 10'000);

struct LinearRankFormulaReport {
  int monoid_size = 0;
  int unit_count = 0;
  RankFormulaReport formula;
  bool directly_finite = false;
  bool le_monoids_ok = false;
};
LinearRankFormulaReport verify_linear_rank_formula(const GroupRing& ring,
                                                   SearchBudget budget = {},
                                                   std::int64_t max_elements =
                                                       10'000);

struct UnitsStructureReport {
  long long unit_count = 0;
  long long trivial_count = 0;   // scalar multiples of group elements
  long long expected_trivial = 0;  // |G| (q - 1) for d = 1
  bool all_trivial = false;
  bool trivial_count_matches = false;
};
/// Counts trivial units a*g against the full unit scan (d = 1 coefficient
/// rings).
UnitsStructureReport verify_units_structure(const GroupRing& ring,
                                            unsigned long long budget =
                                                1'000'000);

}  // namespace camon

#endif  // CAMON_LINEAR_CA_HPP_
