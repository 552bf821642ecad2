#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "camon/errors.hpp"
#include "camon/finite_field.hpp"
#include "camon/group_ring.hpp"
#include "camon/laurent.hpp"
#include "camon/poly.hpp"

using namespace camon;

namespace {

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

void check_field_axioms(const FiniteField& F) {
  const int q = F.size();
  for (int a = 0; a < q; ++a) {
    CHECK(F.add(a, 0) == a);
    CHECK(F.mul(a, 1) == a);
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (int c = 0; c < q; ++c) {
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
  // multiplicative group is cyclic of order q - 1
  const int g = F.multiplicative_generator();
  int x = g, order = 1;
  while (x != 1) {
    x = F.mul(x, g);
    ++order;
  }
  CHECK(order == q - 1);
}

}  // namespace

TEST_CASE("prime and extension fields satisfy the axioms") {
  for (const int q : {2, 3, 4, 5, 7, 8, 9})
    check_field_axioms(FiniteField::of_order(q));
}

TEST_CASE("field construction and parsing") {
  CHECK_THROWS_AS(FiniteField(4), ParseError);           // not prime
  CHECK_THROWS_AS(FiniteField::of_order(6), ParseError); // not a prime power
  CHECK_THROWS_AS(FiniteField(2, {1, 0, 1}), ParseError);  // (x+1)^2
  CHECK_THROWS_AS(FiniteField(2, {0, 1, 1}), ParseError);  // x(x+1)

  const FiniteField f4 = FiniteField::of_order(4);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // lex-least irreducible
  CHECK(f4.spec_string() == "2^2:1,1,1");

  const FiniteField f9 = FiniteField::parse_spec("F9");
  CHECK(f9.size() == 9);
  CHECK(f9.characteristic() == 3);

  const FiniteField back = FiniteField::parse_spec(f4.spec_string());
  CHECK(back == f4);
  CHECK(FiniteField::parse_spec("F5").size() == 5);
  CHECK_THROWS_AS(FiniteField::parse_spec("2^2:1,1"), ParseError);
}

TEST_CASE("pow and embed") {
  const FiniteField f5(5);
  CHECK(f5.pow(2, 4) == 1);
  CHECK(f5.pow(2, -1) == 3);  // 2*3 = 6 = 1
  CHECK(f5.embed(-1) == 4);
  CHECK(f5.embed(12) == 2);
}

TEST_CASE("polynomial division and gcd against multiplication") {
  std::mt19937 rng(7);
  for (const int q : {2, 3, 5}) {
    const FiniteField F = FiniteField::of_order(q);
    std::uniform_int_distribution<int> coeff(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Poly a(1 + rng() % 6), b(1 + rng() % 4);
      for (int& c : a) c = coeff(rng);
      for (int& c : b) c = coeff(rng);
      a = poly_trim(a);
      b = poly_trim(b);
      if (b.empty()) continue;
      const auto [quot, rem] = poly_divmod(F, a, b);
      CHECK(poly_add(F, poly_mul(F, quot, b), rem) == a);
      CHECK(poly_deg(rem) < poly_deg(b));

      const Poly g = poly_gcd(F, a, b);
      if (!a.empty()) CHECK(poly_mod(F, a, g).empty());
      if (!g.empty()) CHECK(poly_mod(F, b, g).empty());
    }
  }
}

TEST_CASE("powmod matches repeated multiplication") {
  const FiniteField f3(3);
  const Poly mod{1, 0, 1};  // x^2 + 1, irreducible over F_3
  Poly x = poly_x();
  Poly acc = poly_mod(f3, poly_one(), mod);
  for (int e = 0; e <= 12; ++e) {
    CHECK(poly_powmod(f3, x, e, mod) == acc);
    acc = poly_mod(f3, poly_mul(f3, acc, x), mod);
  }
}

TEST_CASE("irreducibility by trial division") {
  const FiniteField f2(2);
  CHECK(poly_is_irreducible(f2, {1, 1, 1}));        // x^2+x+1
  CHECK_FALSE(poly_is_irreducible(f2, {1, 0, 1}));  // (x+1)^2
  CHECK(poly_is_irreducible(f2, {1, 1, 0, 1}));     // x^3+x+1
  const FiniteField f3(3);
  CHECK(poly_is_irreducible(f3, {1, 0, 1}));  // x^2+1
  const FiniteField f5(5);
  CHECK_FALSE(poly_is_irreducible(f5, {1, 0, 1}));  // (x+2)(x+3)
}

TEST_CASE("factorization of x^n - 1: frozen small cases") {
  const FiniteField f3(3);
  const auto a = factor_xn_minus_1(f3, 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0].factor == Poly{1, 1});  // x + 1
  CHECK(a[1].factor == Poly{2, 1});  // x - 1 = x + 2
  CHECK(a[0].multiplicity == 1);

  const FiniteField f2(2);
  const auto b = factor_xn_minus_1(f2, 3);
  REQUIRE(b.size() == 2);
  CHECK(b[0].factor == Poly{1, 1});
  CHECK(b[1].factor == Poly{1, 1, 1});

  const auto c = factor_xn_minus_1(f3, 4);
  REQUIRE(c.size() == 3);
  CHECK(c[0].factor == Poly{1, 1});
  CHECK(c[1].factor == Poly{2, 1});
  CHECK(c[2].factor == Poly{1, 0, 1});

  // non-coprime: x^2 - 1 = (x+1)^2 over F_2
  const auto d = factor_xn_minus_1(f2, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].factor == Poly{1, 1});
  CHECK(d[0].multiplicity == 2);

  const auto e = factor_xn_minus_1(f2, 6);
  REQUIRE(e.size() == 2);
  CHECK(e[0].multiplicity == 2);
  CHECK(e[1].multiplicity == 2);
}

TEST_CASE("factorization multiplies back and factors are irreducible") {
  for (const int q : {2, 3, 5}) {
    const FiniteField F = FiniteField::of_order(q);
    for (int n = 1; n <= 14; ++n) {
      const auto factors = factor_xn_minus_1(F, n);
      Poly prod = poly_one();
      for (const PolyFactor& pf : factors) {
        CHECK(poly_is_irreducible(F, pf.factor));
        for (int m = 0; m < pf.multiplicity; ++m)
          prod = poly_mul(F, prod, pf.factor);
      }
      CHECK(prod == poly_xn_minus_1(F, n));
    }
  }
  // a couple of larger coprime cases
  const FiniteField f3(3);
  const auto big = factor_xn_minus_1(f3, 32);
  Poly prod = poly_one();
  for (const PolyFactor& pf : big) prod = poly_mul(f3, prod, pf.factor);
  CHECK(prod == poly_xn_minus_1(f3, 32));
}

TEST_CASE("group algebra decompositions") {
  const FiniteField f2(2), f3(3);

  const PerlisWalkerDecomposition a = perlis_walker(f3, 2);
  CHECK(a.semisimple);
  CHECK(a.t == 2);
  CHECK(a.unit_factors == std::vector<long>{2, 2});
  CHECK(a.abelian_rank == 2);

  const PerlisWalkerDecomposition b = perlis_walker(f2, 3);
  CHECK(b.t == 2);
  CHECK(b.unit_factors == std::vector<long>{1, 3});
  CHECK(b.abelian_rank == 1);

  const PerlisWalkerDecomposition c = perlis_walker(f3, 4);
  CHECK(c.t == 3);
  CHECK(c.summand_sizes == std::vector<long>{3, 3, 9});
  CHECK(c.unit_factors == std::vector<long>{2, 2, 8});
  CHECK(c.abelian_rank == 3);
  CHECK(c.unit_count() == 32);

  const PerlisWalkerDecomposition d = perlis_walker(f2, 2);
  CHECK_FALSE(d.semisimple);

  // t is at least the divisor count of n whenever gcd(n, q) = 1
  for (const int q : {2, 3, 5}) {
    const FiniteField F = FiniteField::of_order(q);
    for (int n = 1; n <= 20; ++n) {
      if (n % F.characteristic() == 0) continue;
      CHECK(perlis_walker(F, n).t >= divisor_count(n));
    }
  }
}

TEST_CASE("unit-group growth along cyclic chains") {
  const FiniteField f3(3);
  // F_3[Z_{2^k}]: every unit factor is even, so the rank equals t
  std::vector<int> t_seq, rank_seq;
  for (int k = 1; k <= 5; ++k) {
    const PerlisWalkerDecomposition pw = perlis_walker(f3, 1 << k);
    t_seq.push_back(pw.t);
    rank_seq.push_back(pw.abelian_rank);
    CHECK(pw.t >= k + 1);
    CHECK(pw.abelian_rank == pw.t);
  }
  CHECK(t_seq == std::vector<int>{2, 3, 5, 7, 9});
  CHECK(rank_seq == std::vector<int>{2, 3, 5, 7, 9});

  // F_2[Z_{3^k}]: each cyclotomic layer is a single irreducible, so t = k+1,
  // and the F_2 summand contributes a trivial unit group, so the rank is k
  const FiniteField f2(2);
  int n = 1;
  for (int k = 1; k <= 4; ++k) {
    n *= 3;
    const PerlisWalkerDecomposition pw = perlis_walker(f2, n);
    CHECK(pw.t == k + 1);
    CHECK(pw.abelian_rank == k);
    CHECK(pw.unit_factors.front() == 1);
    for (std::size_t i = 1; i < pw.unit_factors.size(); ++i)
      CHECK(pw.unit_factors[i] % 3 == 0);
  }
}

TEST_CASE("laurent arithmetic and units") {
  const FiniteField f5(5);
  const Laurent m = laurent_monomial(3, -2);
  CHECK(laurent_is_monomial_unit(f5, m));
  const auto minv = laurent_inverse_within(f5, m, 16);
  REQUIRE(minv.has_value());
  CHECK(laurent_mul(f5, m, *minv) == laurent_monomial(1, 0));

  const FiniteField f2(2);
  Laurent one_plus_x = laurent_monomial(1, 0);
  one_plus_x = laurent_add(f2, one_plus_x, laurent_monomial(1, 1));
  CHECK_FALSE(laurent_is_unit(f2, one_plus_x, 16));

  CHECK(laurent_is_unit(f2, laurent_monomial(1, 0), 16));
  const auto inv1 = laurent_inverse_within(f2, laurent_monomial(1, 0), 16);
  REQUIRE(inv1.has_value());
  CHECK(*inv1 == laurent_monomial(1, 0));

  Laurent zero;
  CHECK_THROWS_AS(laurent_is_unit(f2, zero, 4), ParseError);
}

TEST_CASE("laurent determinants") {
  const FiniteField f2(2);
  const Laurent zero;
  const Laurent one = laurent_monomial(1, 0);
  const Laurent x = laurent_monomial(1, 1);
  const Laurent xinv = laurent_monomial(1, -1);

  CHECK(laurent_det(f2, {one, zero, zero, one}, 2) == one);
  CHECK(laurent_det(f2, {x, zero, zero, xinv}, 2) == one);

  // [[1, x], [x, 1]] has determinant 1 + x^2 over F_2
  const Laurent det = laurent_det(f2, {one, x, x, one}, 2);
  Laurent expected = laurent_add(f2, one, laurent_monomial(1, 2));
  CHECK(det == expected);

  CHECK_THROWS_AS(laurent_det(f2, {one, x, x}, 2), ParseError);

  // multiplicativity on seeded random matrices
  std::mt19937 rng(123);
  for (const int q : {2, 5}) {
    const FiniteField F = FiniteField::of_order(q);
    std::uniform_int_distribution<int> coeff(0, q - 1);
    std::uniform_int_distribution<int> expo(-2, 2);
    auto random_matrix = [&](int n) {
      std::vector<Laurent> m(static_cast<std::size_t>(n) * n);
      for (Laurent& entry : m)
        for (int t = 0; t < 2; ++t) {
          const int c = coeff(rng);
          if (c) entry = laurent_add(F, entry, laurent_monomial(c, expo(rng)));
        }
      return m;
    };
    for (const int n : {2, 3})
      for (int trial = 0; trial < 20; ++trial) {
        const auto A = random_matrix(n), B = random_matrix(n);
        std::vector<Laurent> AB(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Laurent s;
            for (int k = 0; k < n; ++k)
              s = laurent_add(
                  F, s,
                  laurent_mul(F, A[static_cast<std::size_t>(i) * n + k],
                              B[static_cast<std::size_t>(k) * n + j]));
            AB[static_cast<std::size_t>(i) * n + j] = s;
          }
        CHECK(laurent_det(F, AB, n) ==
              laurent_mul(F, laurent_det(F, A, n), laurent_det(F, B, n)));
      }
  }
}
