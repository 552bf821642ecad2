#ifndef CAMON_POLY_HPP_
#define CAMON_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "camon/finite_field.hpp"

namespace camon {

/// Dense univariate polynomial over a finite field: element codes, lowest
/// degree first, normalized (no trailing zeros; the zero polynomial is {}).
using Poly = std::vector<int>;

int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_scale(const FiniteField& F, const Poly& a, int c);
std::pair<Poly, Poly> poly_divmod(const FiniteField& F, Poly num,
                                  const Poly& den);
Poly poly_mod(const FiniteField& F, Poly num, const Poly& den);
Poly poly_monic(const FiniteField& F, Poly f);
Poly poly_gcd(const FiniteField& F, Poly a, Poly b);  // monic
Poly poly_powmod(const FiniteField& F, Poly base, unsigned long long e,
                 const Poly& mod);
/// x^(q^iters) mod f via iterated Frobenius, immune to exponent overflow.
Poly poly_frobenius(const FiniteField& F, int iters, const Poly& mod);
int poly_eval(const FiniteField& F, const Poly& f, int x);

Poly poly_one();
Poly poly_x();
Poly poly_xn_minus_1(const FiniteField& F, int n);

/// Trial division by monic polynomials of degree up to deg(f)/2.
bool poly_is_irreducible(const FiniteField& F, const Poly& f);

struct PolyFactor {
  Poly factor;  // monic irreducible
  int multiplicity = 1;
};

/// Complete factorization of x^n - 1: the p-power part of n is stripped so
/// the remaining polynomial is squarefree, split by distinct degree via
/// gcd(f, x^(q^d) - x), and equal-degree parts are separated by trial
/// division.  Factors are sorted by (degree, coefficient sequence).
std::vector<PolyFactor> factor_xn_minus_1(const FiniteField& F, int n);

std::string poly_to_string(const FiniteField& F, const Poly& f);

}  // namespace camon

#endif  // CAMON_POLY_HPP_
