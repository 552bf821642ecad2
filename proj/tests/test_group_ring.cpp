#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "camon/errors.hpp"
#include "camon/group.hpp"
#include "camon/group_ring.hpp"
#include "camon/linear_ca.hpp"
#include "camon/monoid.hpp"

using namespace camon;

namespace {

GroupRing f_ring(int q, const FiniteGroup& g) {
  return GroupRing(CoefficientRing::field_ring(FiniteField::of_order(q)), g);
}

}  // namespace

TEST_CASE("coefficient rings") {
  const CoefficientRing f3 = CoefficientRing::field_ring(FiniteField(3));
  CHECK(f3.size() == 3);
  CHECK(f3.one() == 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.is_unit(2));
  CHECK_FALSE(f3.is_unit(0));

  const CoefficientRing m2 =
      CoefficientRing::matrix_ring(FiniteField(2), 2);
  CHECK(m2.size() == 16);
  int units = 0;
  for (int a = 0; a < 16; ++a)
    if (m2.is_unit(a)) ++units;
  CHECK(units == 6);  // |GL_2(F_2)|
  // one() codes the identity matrix
  const GfMatrix id = m2.to_matrix(m2.one());
  CHECK(id == gf_identity(2));
  for (int a = 0; a < 16; ++a) {
    CHECK(m2.mul(a, m2.one()) == a);
    CHECK(m2.mul(m2.one(), a) == a);
    CHECK(m2.add(a, m2.neg(a)) == 0);
  }
}

TEST_CASE("ring arithmetic identities") {
  const FiniteGroup z2 = cyclic_group(2);
  const GroupRing r2 = f_ring(2, z2);

  const auto one = r2.one();
  const auto g = r2.monomial(1, 1);
  CHECK(r2.mul(one, g) == g);

  // (1 + g)^2 = 0 in F_2[Z_2]
  const auto one_plus_g = r2.add(one, g);
  CHECK(r2.is_zero(r2.mul(one_plus_g, one_plus_g)));

  // (1 + g)(1 - g) = 0 in F_3[Z_2]
  const GroupRing r3 = f_ring(3, z2);
  const auto a = r3.add(r3.one(), r3.monomial(1, 1));
  const auto b = r3.sub(r3.one(), r3.monomial(1, 1));
  CHECK(r3.is_zero(r3.mul(a, b)));
}

TEST_CASE("ring axioms: exhaustive on F_2[Z_2], sampled elsewhere") {
  const FiniteGroup z2 = cyclic_group(2);
  const GroupRing small = f_ring(2, z2);
  const int n = static_cast<int>(small.element_count());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto a = small.decode(i), b = small.decode(j);
      CHECK(small.add(a, b) == small.add(b, a));
      for (int k = 0; k < n; ++k) {
        const auto c = small.decode(k);
        CHECK(small.mul(small.mul(a, b), c) == small.mul(a, small.mul(b, c)));
        CHECK(small.mul(a, small.add(b, c)) ==
              small.add(small.mul(a, b), small.mul(a, c)));
        CHECK(small.mul(small.add(a, b), c) ==
              small.add(small.mul(a, c), small.mul(b, c)));
      }
    }

  std::mt19937_64 rng(41);
  const FiniteGroup z4 = cyclic_group(4);
  const GroupRing big = f_ring(5, z4);
  const GroupRing mat(CoefficientRing::matrix_ring(FiniteField(2), 2), z2);
  for (const GroupRing* ring : {&big, &mat}) {
    const unsigned long long count = ring->element_count();
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = ring->decode(rng() % count);
      const auto b = ring->decode(rng() % count);
      const auto c = ring->decode(rng() % count);
      CHECK(ring->mul(ring->mul(a, b), c) == ring->mul(a, ring->mul(b, c)));
      CHECK(ring->mul(a, ring->add(b, c)) ==
            ring->add(ring->mul(a, b), ring->mul(a, c)));
      CHECK(ring->mul(ring->one(), a) == a);
      CHECK(ring->mul(a, ring->one()) == a);
    }
  }
}

TEST_CASE("augmentation is a ring homomorphism onto the coefficients") {
  const FiniteGroup z2 = cyclic_group(2);
  const GroupRing r2 = f_ring(2, z2);
  CHECK(r2.augmentation(r2.one()) == 1);
  CHECK(r2.augmentation(r2.add(r2.one(), r2.monomial(1, 1))) == 0);

  std::mt19937_64 rng(5);
  for (const int q : {2, 3, 5}) {
    const GroupRing ring = f_ring(q, z2);
    const unsigned long long count = ring.element_count();
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = ring.decode(rng() % count);
      const auto b = ring.decode(rng() % count);
      CHECK(ring.augmentation(ring.mul(a, b)) ==
            ring.coeff().mul(ring.augmentation(a), ring.augmentation(b)));
      CHECK(ring.augmentation(ring.add(a, b)) ==
            ring.coeff().add(ring.augmentation(a), ring.augmentation(b)));
    }
    // surjective onto the units: a*g is a preimage of a
    for (int a = 1; a < q; ++a)
      for (Elem g = 0; g < z2.order; ++g)
        CHECK(ring.augmentation(ring.monomial(a, g)) == a);
  }
}

TEST_CASE("augmentation ideal and the collapse map") {
  const FiniteGroup z2 = cyclic_group(2);
  const GroupRing r2 = f_ring(2, z2);

  // N trivial: zero ideal, collapse is a bijection
  const QuotientGroup qtriv = make_quotient(z2, trivial_subgroup(z2));
  const AugmentationIdealReport triv = augmentation_ideal(r2, qtriv);
  CHECK(triv.ok);
  CHECK(triv.dim_kernel == 0);
  CHECK(triv.dim_quotient == triv.dim_total);

  // N = Z_2: the ideal is spanned by 1 + g
  const QuotientGroup qfull = make_quotient(z2, full_subgroup(z2));
  const AugmentationIdealReport full = augmentation_ideal(r2, qfull);
  CHECK(full.ok);
  CHECK(full.dim_kernel == 1);
  CHECK(full.dim_quotient == 1);

  // F_3[Z_4] over N = {0,2}: kernel of dimension 2, quotient F_3[Z_2]
  const FiniteGroup z4 = cyclic_group(4);
  const GroupRing r34 = f_ring(3, z4);
  const QuotientGroup q42 = make_quotient(z4, subgroup_from_elements(z4, {0, 2}));
  const AugmentationIdealReport rep = augmentation_ideal(r34, q42);
  CHECK(rep.ok);
  CHECK(rep.dim_total == 4);
  CHECK(rep.dim_kernel == 2);
  CHECK(rep.dim_quotient == 2);

  // augmentation commutes with the collapse
  const GroupRing dst(r34.coeff(), q42.quotient);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = r34.decode(rng() % r34.element_count());
    CHECK(r34.augmentation(a) ==
          dst.augmentation(collapse_element(r34, q42, dst, a)));
  }
}

TEST_CASE("unit scans") {
  const FiniteGroup z2 = cyclic_group(2);
  const FiniteGroup z3 = cyclic_group(3);
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup z5 = cyclic_group(5);

  const UnitReport u22 = units_of_group_ring(f_ring(2, z2));
  CHECK(u22.units.size() == 2);
  CHECK(u22.all_trivial);
  CHECK(u22.unit_group_abelian);
  CHECK(u22.invariant_factors == std::vector<long>{2});

  const UnitReport u23 = units_of_group_ring(f_ring(2, z3));
  CHECK(u23.units.size() == 3);
  CHECK(u23.all_trivial);
  CHECK(u23.invariant_factors == std::vector<long>{3});

  const UnitReport u32 = units_of_group_ring(f_ring(3, z2));
  CHECK(u32.units.size() == 4);
  CHECK(u32.all_trivial);
  CHECK(u32.invariant_factors == std::vector<long>{2, 2});

  const UnitReport u54 = units_of_group_ring(f_ring(5, z4));
  CHECK(u54.ring_size == 625);
  CHECK(u54.units.size() == 256);
  CHECK(u54.trivial_units.size() == 16);
  CHECK_FALSE(u54.all_trivial);
  CHECK(u54.unit_group_abelian);
  CHECK(u54.invariant_factors == std::vector<long>{4, 4, 4, 4});

  const UnitReport u34 = units_of_group_ring(f_ring(3, z4));
  CHECK(u34.units.size() == 32);
  CHECK(u34.invariant_factors == std::vector<long>{2, 2, 8});

  // F_2[Z_5] = F_2 + F_16: 15 units, only 5 trivial
  const UnitReport u25 = units_of_group_ring(f_ring(2, z5));
  CHECK(u25.units.size() == 15);
  CHECK(u25.trivial_units.size() == 5);

  // every reported unit has a verified two-sided inverse
  const GroupRing r54 = f_ring(5, z4);
  for (unsigned long long code : u54.units) {
    const auto inv = r54.inverse(r54.decode(code));
    REQUIRE(inv.has_value());
    CHECK(r54.mul(r54.decode(code), *inv) == r54.one());
    CHECK(r54.mul(*inv, r54.decode(code)) == r54.one());
  }
}

TEST_CASE("unit count matches the decomposition when gcd(n, q) = 1") {
  for (const auto& [q, n] : std::vector<std::pair<int, int>>{
           {2, 3}, {2, 5}, {3, 2}, {3, 4}, {5, 2}, {5, 4}}) {
    const FiniteField F = FiniteField::of_order(q);
    const PerlisWalkerDecomposition pw = perlis_walker(F, n);
    const UnitReport scan = units_of_group_ring(f_ring(q, cyclic_group(n)));
    CHECK(static_cast<long long>(scan.units.size()) == pw.unit_count());
    // and the invariant factors agree with the direct sum of cyclic groups
    CHECK(abelian_group_rank(pw.unit_factors) ==
          static_cast<int>(scan.invariant_factors.size()));
  }
}

TEST_CASE("unit scans are deterministic across worker counts") {
  const FiniteGroup z4 = cyclic_group(4);
  const GroupRing ring = f_ring(5, z4);
  const UnitReport serial = units_of_group_ring(ring, 1'000'000, 1);
  const UnitReport threaded = units_of_group_ring(ring, 1'000'000, 4);
  CHECK(serial.units == threaded.units);
  CHECK(serial.trivial_units == threaded.trivial_units);
  CHECK(serial.invariant_factors == threaded.invariant_factors);
}

TEST_CASE("budget-limited scans are flagged") {
  const UnitReport limited =
      units_of_group_ring(f_ring(5, cyclic_group(4)), 100);
  CHECK_FALSE(limited.exhaustive);
  CHECK_FALSE(limited.all_trivial);
  CHECK(limited.units.size() == 16);  // the visible trivial units
}

TEST_CASE("matrix-coefficient group ring") {
  const FiniteGroup z2 = cyclic_group(2);
  const GroupRing mat(CoefficientRing::matrix_ring(FiniteField(2), 2), z2);
  CHECK(mat.element_count() == 256);

  const UnitReport units = units_of_group_ring(mat);
  // GL_2 over the local ring F_2[Z_2]: 6 residue images times 16 kernel cosets
  CHECK(units.units.size() == 96);
  CHECK_FALSE(units.unit_group_abelian);

  // inverse round trip on a decoded unit
  const auto a = mat.decode(units.units[10]);
  const auto inv = mat.inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat.mul(a, *inv) == mat.one());
}

TEST_CASE("augmentation as a monoid epimorphism bounds ranks") {
  // multiplicative monoid of F_2[Z_2] onto the multiplicative monoid of F_2
  const FiniteGroup z2 = cyclic_group(2);
  const GroupRing ring = f_ring(2, z2);
  const FiniteMonoid m1 = linear_monoid(ring);
  const FiniteMonoid m2 =
      FiniteMonoid::from_table(2, {0, 0, 0, 1}, "F2.mult");

  std::vector<int> phi;
  for (int code = 0; code < m1.size; ++code)
    phi.push_back(ring.augmentation(ring.decode(code)));
  const EpiBoundsReport rep = epimorphism_rank_bounds(m1, m2, phi);
  CHECK(rep.homomorphism);
  CHECK(rep.surjective);
  CHECK(rep.units_to_units);
  REQUIRE(rep.all_exact);
  CHECK(*rep.rank_image.rank == 1);
  CHECK(*rep.rank_source.rank == 2);
  CHECK(rep.rank_bound_ok);
  CHECK(rep.rel_bound_ok);
}

TEST_CASE("element string round trip") {
  const FiniteGroup z4 = cyclic_group(4);
  const GroupRing ring = f_ring(5, z4);
  const auto a = ring.decode(417);
  CHECK(ring.element_from_string(ring.element_to_string(a)) == a);
  CHECK_THROWS_AS(ring.element_from_string("1 2"), ParseError);
  CHECK_THROWS_AS(ring.element_from_string("1 2 3 9"), ParseError);
}
