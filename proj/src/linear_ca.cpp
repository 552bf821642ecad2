#include "camon/linear_ca.hpp"

#include "camon/errors.hpp"

namespace camon {

GfMatrix linear_ca_matrix(const GroupRing& ring, const GroupRing::Element& a) {
  const FiniteGroup& G = ring.group();
  const int d = ring.coeff().d;
  const int n = G.order * d;
  GfMatrix m(n, n);
  for (Elem g = 0; g < G.order; ++g)
    for (Elem h = 0; h < G.order; ++h) {
      const GfMatrix block = ring.coeff().to_matrix(a[G.op(G.inv(g), h)]);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          m.at(g * d + i, h * d + j) = block.at(i, j);
    }
  return m;
}

LinearCA linear_ca_from_groupring(const GroupRing& ring,
                                  const GroupRing::Element& a) {
  return {a, linear_ca_matrix(ring, a)};
}

GroupRing::Element groupring_from_matrix(const GroupRing& ring,
                                         const GfMatrix& m) {
  const FiniteGroup& G = ring.group();
  const int d = ring.coeff().d;
  if (m.rows != G.order * d || m.cols != G.order * d)
    throw ParseError("matrix has the wrong shape for this ring");
  GroupRing::Element a(G.order);
  const Elem e = G.identity;
  for (Elem s = 0; s < G.order; ++s) {
    GfMatrix block(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        block.at(i, j) = m.at(e * d + i, G.op(e, s) * d + j);
    a[s] = ring.coeff().from_matrix(block);
  }
  return a;
}

bool lin_is_injective(const GroupRing& ring, const LinearCA& t) {
  return gf_rank(ring.coeff().F, t.matrix) == t.matrix.rows;
}

bool lin_is_surjective(const GroupRing& ring, const LinearCA& t) {
  // square matrix over a field: full row rank == full column rank
  return gf_rank(ring.coeff().F, t.matrix) == t.matrix.cols;
}

CellularAutomaton linear_ca_as_plain_ca(const GroupRing& ring,
                                        const GroupRing::Element& a) {
  const FiniteGroup& G = ring.group();
  const FiniteField& F = ring.coeff().F;
  const int d = ring.coeff().d;
  long long alphabet = 1;
  for (int i = 0; i < d; ++i) alphabet *= F.size();
  const ShiftSpace space(G, static_cast<int>(alphabet));
  const GfMatrix m = linear_ca_matrix(ring, a);

  // symbol code <-> vector in F_q^d (base-q digits)
  auto decode_symbol = [&](int code, std::vector<int>& v, int offset) {
    for (int i = 0; i < d; ++i) {
      v[offset + i] = code % F.size();
      code /= F.size();
    }
  };
  std::vector<std::uint8_t> rule(space.config_count);
  std::vector<int> vec(static_cast<std::size_t>(G.order) * d);
  for (std::int64_t x = 0; x < space.config_count; ++x) {
    for (Elem g = 0; g < G.order; ++g)
      decode_symbol(space.digit(x, g), vec, g * d);
    // local rule = row block of the identity element
    int symbol = 0, w = 1;
    for (int i = 0; i < d; ++i) {
      int acc = 0;
      for (int c = 0; c < m.cols; ++c)
        acc = F.add(acc, F.mul(m.at(G.identity * d + i, c), vec[c]));
      symbol += acc * w;
      w *= F.size();
    }
    rule[x] = static_cast<std::uint8_t>(symbol);
  }
  return make_ca(G, static_cast<int>(alphabet), std::move(rule));
}

FiniteMonoid linear_monoid(const GroupRing& ring, std::int64_t max_elements) {
  const unsigned long long count = ring.element_count();
  if (count > static_cast<unsigned long long>(max_elements))
    throw BudgetError("multiplicative monoid exceeds the element budget");
  const int n = static_cast<int>(count);
  std::vector<GroupRing::Element> elems;
  elems.reserve(n);
  for (int i = 0; i < n; ++i) elems.push_back(ring.decode(i));
  std::vector<std::int32_t> op(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      op[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int32_t>(ring.encode(ring.mul(elems[i], elems[j])));
  return FiniteMonoid::from_table(
      n, std::move(op),
      ring.coeff().F.spec_string() + "[" + ring.group().label + "]" +
          (ring.coeff().d > 1 ? "^" + std::to_string(ring.coeff().d) : ""));
}

LinearRankFormulaReport verify_linear_rank_formula(const GroupRing& ring,
                                                   SearchBudget budget,
                                                   std::int64_t max_elements) {
  LinearRankFormulaReport rep;
  const FiniteMonoid m = linear_monoid(ring, max_elements);
  rep.monoid_size = m.size;
  rep.unit_count = static_cast<int>(classify_units(m).units.size());
  rep.directly_finite = is_directly_finite(m).directly_finite;
  rep.le_monoids_ok = verify_le_monoids(m).all_ok;
  rep.formula = verify_rank_formula(m, budget);
  return rep;
}

UnitsStructureReport verify_units_structure(const GroupRing& ring,
                                            unsigned long long budget) {
  UnitsStructureReport rep;
  const UnitReport units = units_of_group_ring(ring, budget);
  rep.unit_count = static_cast<long long>(units.units.size());
  rep.trivial_count = static_cast<long long>(units.trivial_units.size());
  if (ring.coeff().d == 1) {
    rep.expected_trivial = static_cast<long long>(ring.group().order) *
                           (ring.coeff().F.size() - 1);
    rep.trivial_count_matches = rep.trivial_count == rep.expected_trivial;
  }
  rep.all_trivial = units.exhaustive && rep.unit_count == rep.trivial_count;
  return rep;
}

}  // namespace camon
