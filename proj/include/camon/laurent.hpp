#ifndef CAMON_LAURENT_HPP_
#define CAMON_LAURENT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camon/finite_field.hpp"

namespace camon {

/// Finitely supported Laurent polynomial over F_q: exponent -> nonzero
/// coefficient code.  Exponents may be negative.
using Laurent = std::map<int, int>;

Laurent laurent_trim(Laurent f);
Laurent laurent_add(const FiniteField& F, const Laurent& a, const Laurent& b);
Laurent laurent_sub(const FiniteField& F, const Laurent& a, const Laurent& b);
Laurent laurent_mul(const FiniteField& F, const Laurent& a, const Laurent& b);
Laurent laurent_monomial(int coeff, int exponent);
bool laurent_is_zero(const Laurent& f);

/// Units of F[x, x^-1] are exactly the nonzero monomials.
bool laurent_is_monomial_unit(const FiniteField& F, const Laurent& f);

/// Searches for an inverse supported on exponents within `degree_bound` of
/// the origin by solving the linear system f*h = 1 over F_q.
std::optional<Laurent> laurent_inverse_within(const FiniteField& F,
                                              const Laurent& f,
                                              int degree_bound);

/// Structural monomial test, cross-checked against the bounded inverse
/// search; throws on the zero polynomial.
bool laurent_is_unit(const FiniteField& F, const Laurent& f, int degree_bound);

/// Determinant of a square matrix of Laurent polynomials (row-major
/// entries), by cofactor expansion; multiplicative over this commutative
/// ring.
Laurent laurent_det(const FiniteField& F, const std::vector<Laurent>& entries,
                    int n);

std::string laurent_to_string(const Laurent& f);

}  // namespace camon

#endif  // CAMON_LAURENT_HPP_
