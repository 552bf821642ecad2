#ifndef CAMON_GROUP_RING_HPP_
#define CAMON_GROUP_RING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "camon/finite_field.hpp"
#include "camon/gf_matrix.hpp"
#include "camon/group.hpp"
#include "camon/poly.hpp"

namespace camon {

/// Coefficient domain of a group ring: either F_q itself or d x d matrices
/// over it.  A coefficient is coded as an integer in [0, q^(d^2)) whose
/// base-q digits are the matrix entries row-major; for d = 1 the code is the
/// field element itself.
struct CoefficientRing {
  enum class Kind { field, matrix };
  Kind kind;
  FiniteField F;
  int d;

  CoefficientRing(Kind k, FiniteField f, int dim)
      : kind(k), F(std::move(f)), d(dim) {}
  static CoefficientRing field_ring(FiniteField f);
  static CoefficientRing matrix_ring(FiniteField f, int d);

  long long size() const;
  int fq_dim() const { return d * d; }
  int zero() const { return 0; }
  int one() const;
  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  bool is_unit(int a) const;
  GfMatrix to_matrix(int code) const;
  int from_matrix(const GfMatrix& m) const;
};

/// R[G]: formal sums over a finite group with convolution product.
/// Elements are coefficient-code vectors indexed by group element.
class GroupRing {
 public:
  GroupRing(CoefficientRing r, const FiniteGroup& g);

  using Element = std::vector<int>;

  const CoefficientRing& coeff() const { return R_; }
  const FiniteGroup& group() const { return *G_; }

  Element zero() const { return Element(G_->order, 0); }
  Element one() const;
  Element monomial(int c, Elem g) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;

  /// Sum of the coefficients; a ring homomorphism onto R.
  int augmentation(const Element& a) const;

  /// Number of ring elements, q^(d^2 |G|); throws BudgetError over 2^62.
  unsigned long long element_count() const;
  Element decode(unsigned long long code) const;
  unsigned long long encode(const Element& a) const;

  /// Left multiplication by `a` as an F_q-linear map on R[G]; the element is
  /// a unit exactly when this matrix is invertible.
  GfMatrix left_multiplication_matrix(const Element& a) const;
  std::optional<Element> inverse(const Element& a) const;
  bool is_unit(const Element& a) const;
  /// Support size one with an invertible coefficient.
  bool is_trivial_unit(const Element& a) const;

  std::vector<int> to_fq_vector(const Element& a) const;   // length d^2 |G|
  Element from_fq_vector(std::span<const int> v) const;

  std::string element_to_string(const Element& a) const;
  Element element_from_string(std::string_view text) const;

 private:
  CoefficientRing R_;
  const FiniteGroup* G_;
};

struct UnitReport {
  unsigned long long ring_size = 0;
  std::vector<unsigned long long> units;          // element codes, ascending
  std::vector<unsigned long long> trivial_units;  // subset of units
  bool all_trivial = false;
  bool exhaustive = true;  // false when the scan was budget-limited
  bool unit_group_abelian = false;
  std::vector<long> invariant_factors;  // abelian unit groups only
  long unit_group_order = 0;
};

/// Enumerates units with verified two-sided inverses.  Above the budget only
/// the trivial units are listed and `exhaustive` is false.
UnitReport units_of_group_ring(const GroupRing& ring,
                               unsigned long long budget = 1'000'000,
                               int workers = 1);

struct AugmentationIdealReport {
  int dim_total = 0;     // F_q-dimension of R[G]
  int dim_kernel = 0;    // dimension of the ideal
  int dim_quotient = 0;  // dimension of R[G/N]
  bool two_sided = false;
  bool kernel_matches_span = false;  // span{g - rep(g)} = ker(collapse)
  bool collapse_multiplicative = false;
  bool collapse_surjective = false;
  bool ok = false;
};

/// The ideal generated by {a - 1 : a in N} together with the coefficient
/// collapse map R[G] -> R[G/N] realizing R[G]/ideal = R[G/N].
AugmentationIdealReport augmentation_ideal(const GroupRing& src,
                                           const QuotientGroup& quo);

/// Pushes coefficients along the projection G -> G/N.
GroupRing::Element collapse_element(const GroupRing& src,
                                    const QuotientGroup& quo,
                                    const GroupRing& dst,
                                    const GroupRing::Element& a);

struct PerlisWalkerDecomposition {
  int n = 0;
  int q = 0;
  std::vector<PolyFactor> factors;   // of x^n - 1
  bool semisimple = false;           // gcd(n, q) = 1
  int t = 0;                         // number of field summands
  std::vector<long> summand_sizes;   // q^deg per summand
  std::vector<long> unit_factors;    // q^deg - 1 per summand
  int abelian_rank = 0;              // rank of the direct sum of unit groups
  long long unit_count() const;      // product of unit_factors
};

/// Decomposition of F_q[Z_n] from the factorization of x^n - 1.  Summand
/// data describes the direct sum of fields when gcd(n, q) = 1; otherwise
/// only the factor list (with multiplicities) is meaningful.
PerlisWalkerDecomposition perlis_walker(const FiniteField& F, int n);

}  // namespace camon

#endif  // CAMON_GROUP_RING_HPP_
