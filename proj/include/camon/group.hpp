#ifndef CAMON_GROUP_HPP_
#define CAMON_GROUP_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace camon {

using Elem = int;

/// A finite group given by an explicit Cayley table.  Immutable after
/// construction; `from_table` verifies the group axioms exhaustively.
struct FiniteGroup {
  int order = 0;
  std::vector<Elem> table;  // row-major, table[a * order + b] = a*b
  Elem identity = 0;
  std::vector<Elem> inverse;
  std::string label;

  Elem op(Elem a, Elem b) const {
    return table[static_cast<std::size_t>(a) * order + b];
  }
  Elem inv(Elem a) const { return inverse[static_cast<std::size_t>(a)]; }
  // g h g^{-1}
  Elem conjugate(Elem g, Elem h) const { return op(op(g, h), inv(g)); }
  int element_order(Elem g) const;
  bool is_abelian() const;
  std::uint64_t content_hash() const;

  /// Validates associativity, locates the identity and inverses.
  /// Throws ParseError on any violation; orders above 128 are rejected.
  static FiniteGroup from_table(int order, std::vector<Elem> table,
                                std::string label);
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
FiniteGroup symmetric_group_s3();
FiniteGroup dihedral_group_d4();
FiniteGroup quaternion_group_q8();

/// Resolves built-in names: "Zn" (any n), "Z2xZ2", "S3", "D4", "Q8", and
/// 'x'-separated direct products of those, e.g. "Z2xZ4".
FiniteGroup named_group(std::string_view name);

std::string to_cayley_text(const FiniteGroup& g);
FiniteGroup group_from_cayley_text(std::string_view text,
                                   std::string label = "imported");

/// A subgroup of a fixed parent, stored as a 64-bit membership mask
/// (element i belongs iff bit i is set).  Parent order must be <= 64.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::uint64_t members = 0;
  bool normal = false;
  int index = 1;

  int size() const;
  bool contains(Elem g) const { return (members >> g) & 1u; }
  std::vector<Elem> elements() const;
};

std::uint64_t subgroup_closure(const FiniteGroup& g, std::uint64_t seed);
bool is_subgroup_mask(const FiniteGroup& g, std::uint64_t mask);
bool is_normal_mask(const FiniteGroup& g, std::uint64_t mask);
Subgroup make_subgroup(const FiniteGroup& g, std::uint64_t mask);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup subgroup_from_elements(const FiniteGroup& g,
                                const std::vector<Elem>& elems);

/// All subgroups, in deterministic order (size, then mask value).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g,
                                          int order_bound = 64);

/// Conjugacy classes of subgroups and the partial order [H] <= [K]
/// (some conjugate of H is contained in K), with the statistics used by
/// the relative-rank lower bounds.
struct SubgroupLatticeSummary {
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<int>> classes;        // indices into `subgroups`
  std::set<std::pair<int, int>> order_relation;  // class pairs, reflexive
  long edge_count_all_pairs = 0;  // all comparable ordered pairs
  long edge_count_hasse = 0;      // covering relations only
  int index2_count = 0;           // subgroups of index 2
  int normal_count = 0;           // n(G)
  int class_count = 0;            // r(G)
};

SubgroupLatticeSummary lattice_summary(const FiniteGroup& g,
                                       int order_bound = 64);
bool is_dedekind(const FiniteGroup& g, int order_bound = 64);

/// G/N for normal N, with the projection and a fixed section (each coset is
/// represented by its smallest element index).
struct QuotientGroup {
  const FiniteGroup* source = nullptr;
  Subgroup kernel;
  FiniteGroup quotient;
  std::vector<Elem> projection;  // |G| -> |G/N|
  std::vector<Elem> section;     // |G/N| -> representative in G
};

QuotientGroup make_quotient(const FiniteGroup& g, const Subgroup& n);

/// The finite shadow of a descending chain of finite-index normal subgroups:
/// cyclic quotients Z_m, Z_{m^2}, ..., Z_{m^depth}.
struct ChainFamily {
  int modulus = 2;
  int depth = 0;
  std::vector<FiniteGroup> quotients;
};

ChainFamily chain_family(int m, int k_max, int order_bound = 64);
std::vector<int> normal_count_along_chain(const ChainFamily& fam);

}  // namespace camon

#endif  // CAMON_GROUP_HPP_
