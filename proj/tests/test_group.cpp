#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "camon/errors.hpp"
#include "camon/group.hpp"

using namespace camon;

namespace {

// Independent oracle: every subset of a small group, kept when it contains
// the identity and is closed under the operation and inversion.
std::set<std::uint64_t> oracle_subgroups(const FiniteGroup& g) {
  REQUIRE(g.order <= 10);
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ull << g.order); ++mask) {
    if (!((mask >> g.identity) & 1u)) continue;
    bool closed = true;
    for (Elem a = 0; a < g.order && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      if (!((mask >> g.inv(a)) & 1u)) closed = false;
      for (Elem b = 0; b < g.order && closed; ++b)
        if ((mask >> b) & 1u)
          if (!((mask >> g.op(a, b)) & 1u)) closed = false;
    }
    if (closed) out.insert(mask);
  }
  return out;
}

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

std::vector<FiniteGroup> test_pool() {
  std::vector<FiniteGroup> pool;
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12, 24}) pool.push_back(cyclic_group(n));
  pool.push_back(named_group("Z2xZ2"));
  pool.push_back(named_group("Z2xZ4"));
  pool.push_back(symmetric_group_s3());
  pool.push_back(dihedral_group_d4());
  pool.push_back(quaternion_group_q8());
  return pool;
}

}  // namespace

TEST_CASE("cyclic groups") {
  const FiniteGroup z1 = cyclic_group(1);
  CHECK(z1.order == 1);
  CHECK(z1.identity == 0);

  const FiniteGroup z4 = cyclic_group(4);
  CHECK(z4.op(1, 3) == 0);
  CHECK(z4.op(2, 3) == 1);
  CHECK(z4.element_order(2) == 2);
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.inv(3) == 1);
}

TEST_CASE("group axioms hold exhaustively across the pool") {
  for (const FiniteGroup& g : test_pool()) {
    if (g.order > 24) continue;
    for (Elem a = 0; a < g.order; ++a) {
      CHECK(g.op(a, g.identity) == a);
      CHECK(g.op(g.identity, a) == a);
      CHECK(g.op(a, g.inv(a)) == g.identity);
      for (Elem b = 0; b < g.order; ++b)
        for (Elem c = 0; c < g.order; ++c)
          CHECK(g.op(g.op(a, b), c) == g.op(a, g.op(b, c)));
    }
  }
}

TEST_CASE("direct products") {
  const FiniteGroup z3 = cyclic_group(3);
  const FiniteGroup p = direct_product(cyclic_group(1), z3);
  CHECK(p.order == 3);
  CHECK(p.table == z3.table);  // the trivial factor changes nothing

  const FiniteGroup klein = named_group("Z2xZ2");
  CHECK(klein.order == 4);
  for (Elem a = 0; a < 4; ++a) CHECK(klein.element_order(a) <= 2);

  const FiniteGroup z2xz4 = named_group("Z2xZ4");
  const auto subs = enumerate_subgroups(z2xz4);
  CHECK(subs.size() == 8);
  CHECK(std::all_of(subs.begin(), subs.end(),
                    [](const Subgroup& h) { return h.normal; }));
}

TEST_CASE("named groups and validation errors") {
  CHECK(named_group("Z12").order == 12);
  CHECK(named_group("S3").order == 6);
  CHECK(named_group("D4").order == 8);
  CHECK(named_group("Q8").order == 8);
  CHECK_THROWS_AS(named_group("E7"), ParseError);

  // non-associative table
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}, "bad"), ParseError);
  // associative but no identity (constant operation)
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 0, 0, 0}, "bad"), ParseError);
  // identity in a nonstandard position is accepted
  CHECK(FiniteGroup::from_table(2, {1, 0, 0, 1}, "z2").identity == 1);
}

TEST_CASE("subgroup enumeration matches the subset oracle") {
  for (const FiniteGroup& g : test_pool()) {
    if (g.order > 10) continue;
    const std::set<std::uint64_t> expected = oracle_subgroups(g);
    const std::vector<Subgroup> got = enumerate_subgroups(g);
    std::set<std::uint64_t> masks;
    for (const Subgroup& h : got) masks.insert(h.members);
    CHECK(masks == expected);
  }
}

TEST_CASE("subgroup counts frozen from the oracle") {
  CHECK(enumerate_subgroups(cyclic_group(2)).size() == 2);
  CHECK(enumerate_subgroups(cyclic_group(4)).size() == 3);
  CHECK(enumerate_subgroups(cyclic_group(8)).size() == 4);

  const FiniteGroup s3 = symmetric_group_s3();
  const auto subs = enumerate_subgroups(s3);
  CHECK(subs.size() == 6);
  int order2 = 0;
  for (const Subgroup& h : subs)
    if (h.size() == 2) ++order2;
  CHECK(order2 == 3);

  // deterministic order: by size, then mask
  for (std::size_t i = 1; i < subs.size(); ++i) {
    const bool lt = subs[i - 1].size() < subs[i].size() ||
                    (subs[i - 1].size() == subs[i].size() &&
                     subs[i - 1].members < subs[i].members);
    CHECK(lt);
  }
  const auto again = enumerate_subgroups(s3);
  REQUIRE(again.size() == subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    CHECK(again[i].members == subs[i].members);
}

TEST_CASE("subgroup enumeration respects the bound") {
  CHECK_THROWS_AS(enumerate_subgroups(cyclic_group(16), 8), BudgetError);
}

TEST_CASE("lattice summaries") {
  const SubgroupLatticeSummary z1 = lattice_summary(cyclic_group(1));
  CHECK(z1.class_count == 1);
  CHECK(z1.edge_count_all_pairs == 1);

  const SubgroupLatticeSummary z2 = lattice_summary(cyclic_group(2));
  CHECK(z2.class_count == 2);
  CHECK(z2.edge_count_all_pairs == 3);
  CHECK(z2.index2_count == 1);
  CHECK(z2.normal_count == 2);
  CHECK(z2.edge_count_hasse == 1);

  const SubgroupLatticeSummary z3 = lattice_summary(cyclic_group(3));
  CHECK(z3.edge_count_all_pairs == 3);
  CHECK(z3.index2_count == 0);

  const SubgroupLatticeSummary z4 = lattice_summary(cyclic_group(4));
  CHECK(z4.edge_count_all_pairs == 6);
  CHECK(z4.index2_count == 1);
  CHECK(z4.normal_count == 3);
  CHECK(z4.edge_count_hasse == 2);

  const SubgroupLatticeSummary s3 = lattice_summary(symmetric_group_s3());
  CHECK(s3.class_count == 4);
  CHECK(s3.normal_count == 3);
  // {1} <= all, [Z2] </= [A3]
  CHECK(s3.edge_count_all_pairs == 9);
}

TEST_CASE("order relation is a partial order on classes") {
  for (const FiniteGroup& g : test_pool()) {
    const SubgroupLatticeSummary lat = lattice_summary(g);
    const int c = lat.class_count;
    auto leq = [&lat](int i, int j) {
      return lat.order_relation.count({i, j}) > 0;
    };
    for (int i = 0; i < c; ++i) {
      CHECK(leq(i, i));
      for (int j = 0; j < c; ++j) {
        if (i != j) CHECK_FALSE((leq(i, j) && leq(j, i)));
        for (int k = 0; k < c; ++k)
          if (leq(i, j) && leq(j, k)) CHECK(leq(i, k));
      }
    }
    CHECK(lat.edge_count_all_pairs >= lat.class_count);
    CHECK(lat.class_count >= lat.normal_count);
  }
}

TEST_CASE("dedekind groups") {
  CHECK(is_dedekind(cyclic_group(6)));
  CHECK_FALSE(is_dedekind(symmetric_group_s3()));
  CHECK(is_dedekind(quaternion_group_q8()));
  CHECK_FALSE(is_dedekind(dihedral_group_d4()));

  const auto q8 = enumerate_subgroups(quaternion_group_q8());
  CHECK(q8.size() == 6);
}

TEST_CASE("quotients") {
  const FiniteGroup z4 = cyclic_group(4);
  const Subgroup n = subgroup_from_elements(z4, {0, 2});
  const QuotientGroup q = make_quotient(z4, n);
  CHECK(q.quotient.order == 2);
  for (Elem x = 0; x < 4; ++x) CHECK(q.projection[x] == x % 2);
  for (Elem c = 0; c < 2; ++c) CHECK(q.projection[q.section[c]] == c);

  // projection is a homomorphism with kernel N
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      CHECK(q.projection[z4.op(a, b)] ==
            q.quotient.op(q.projection[a], q.projection[b]));
  for (Elem a = 0; a < 4; ++a)
    CHECK((q.projection[a] == q.quotient.identity) == n.contains(a));

  const QuotientGroup full = make_quotient(z4, trivial_subgroup(z4));
  CHECK(full.quotient.order == 4);
  CHECK(full.quotient.table == z4.table);

  const FiniteGroup z8 = cyclic_group(8);
  const QuotientGroup q8 = make_quotient(z8, subgroup_from_elements(z8, {0, 4}));
  CHECK(q8.quotient.order == 4);
  // cyclic of order 4
  bool has_order4 = false;
  for (Elem x = 0; x < 4; ++x)
    if (q8.quotient.element_order(x) == 4) has_order4 = true;
  CHECK(has_order4);

  // quotient by a non-normal subgroup is rejected
  const FiniteGroup s3 = symmetric_group_s3();
  for (const Subgroup& h : enumerate_subgroups(s3))
    if (!h.normal) CHECK_THROWS_AS(make_quotient(s3, h), ParseError);
}

TEST_CASE("correspondence: n(G/N) counts the normal subgroups over N") {
  for (const FiniteGroup& g : test_pool()) {
    if (g.order > 24) continue;
    const std::vector<Subgroup> subs = enumerate_subgroups(g);
    for (const Subgroup& n : subs) {
      if (!n.normal) continue;
      const QuotientGroup q = make_quotient(g, n);
      int over = 0;
      for (const Subgroup& m : subs)
        if (m.normal && (m.members & n.members) == n.members) ++over;
      int quotient_normals = 0;
      for (const Subgroup& h : enumerate_subgroups(q.quotient))
        if (h.normal) ++quotient_normals;
      CHECK(quotient_normals == over);
    }
  }
}

TEST_CASE("chain families") {
  const ChainFamily fam = chain_family(2, 3);
  REQUIRE(fam.quotients.size() == 3);
  CHECK(fam.quotients[0].table == cyclic_group(2).table);
  CHECK(fam.quotients[1].table == cyclic_group(4).table);
  CHECK(fam.quotients[2].table == cyclic_group(8).table);

  // successive reduction maps are homomorphisms
  for (std::size_t i = 1; i < fam.quotients.size(); ++i) {
    const FiniteGroup& big = fam.quotients[i];
    const FiniteGroup& small = fam.quotients[i - 1];
    for (Elem a = 0; a < big.order; ++a)
      for (Elem b = 0; b < big.order; ++b)
        CHECK(big.op(a, b) % small.order ==
              small.op(a % small.order, b % small.order));
  }

  const ChainFamily f3 = chain_family(3, 2);
  CHECK(f3.quotients[1].order == 9);
  CHECK(chain_family(2, 1).quotients.size() == 1);
  CHECK_THROWS_AS(chain_family(2, 7), BudgetError);
  CHECK_THROWS_AS(chain_family(1, 2), ParseError);
}

TEST_CASE("normal counts along chains equal divisor counts") {
  const std::vector<int> c2 = normal_count_along_chain(chain_family(2, 4));
  CHECK(c2 == std::vector<int>{2, 3, 4, 5});
  const std::vector<int> c3 = normal_count_along_chain(chain_family(3, 3));
  CHECK(c3 == std::vector<int>{2, 3, 4});
  for (int k = 1; k <= 4; ++k) CHECK(c2[k - 1] == divisor_count(1 << k));

  // k = 0 edge: the trivial group has exactly one (normal) subgroup
  CHECK(lattice_summary(cyclic_group(1)).normal_count == 1);

  // n(Z_{2^k}) = k+1 strictly increases up to k = 6
  const std::vector<int> c6 = normal_count_along_chain(chain_family(2, 6));
  for (int k = 1; k <= 6; ++k) CHECK(c6[k - 1] == k + 1);
}

TEST_CASE("cayley text round trip") {
  for (const FiniteGroup& g : {cyclic_group(6), symmetric_group_s3()}) {
    const FiniteGroup back = group_from_cayley_text(to_cayley_text(g), g.label);
    CHECK(back.order == g.order);
    CHECK(back.table == g.table);
    CHECK(back.identity == g.identity);
  }
  CHECK_THROWS_AS(group_from_cayley_text("order 2\n0 1\n", "short"),
                  ParseError);
  CHECK_THROWS_AS(group_from_cayley_text("2\n0 1\n1 0\n", "no-header"),
                  ParseError);
}
