#include "camon/group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>

#include "camon/errors.hpp"

namespace camon {

namespace {

constexpr int kMaxOrder = 128;

void check_order(int order) {
  if (order < 1) throw ParseError("group order must be positive");
  if (order > kMaxOrder)
    throw ParseError("group order " + std::to_string(order) +
                     " exceeds the supported maximum " +
                     std::to_string(kMaxOrder));
}

}  // namespace

int FiniteGroup::element_order(Elem g) const {
  Elem x = g;
  int k = 1;
  while (x != identity) {
    x = op(x, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order; ++a)
    for (Elem b = a + 1; b < order; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::uint64_t FiniteGroup::content_hash() const {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(order));
  for (Elem e : table) mix(static_cast<std::uint64_t>(e));
  return h;
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<Elem> table,
                                    std::string label) {
  check_order(order);
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw ParseError("Cayley table has wrong size for order " +
                     std::to_string(order));
  for (Elem e : table)
    if (e < 0 || e >= order) throw ParseError("Cayley table entry out of range");

  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  g.label = std::move(label);

  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      for (Elem c = 0; c < order; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw ParseError("operation is not associative");

  Elem identity = -1;
  for (Elem e = 0; e < order; ++e) {
    bool neutral = true;
    for (Elem a = 0; a < order && neutral; ++a)
      neutral = g.op(e, a) == a && g.op(a, e) == a;
    if (neutral) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ParseError("table has no two-sided identity");
  g.identity = identity;

  g.inverse.assign(order, -1);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      if (g.op(a, b) == identity && g.op(b, a) == identity) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0)
      throw ParseError("element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

FiniteGroup cyclic_group(int n) {
  check_order(n);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::from_table(n, std::move(table), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n = g1.order * g2.order;
  check_order(n);
  // index (a, b) -> a * |g2| + b
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem a1 = 0; a1 < g1.order; ++a1)
    for (Elem b1 = 0; b1 < g2.order; ++b1)
      for (Elem a2 = 0; a2 < g1.order; ++a2)
        for (Elem b2 = 0; b2 < g2.order; ++b2) {
          const Elem x = a1 * g2.order + b1;
          const Elem y = a2 * g2.order + b2;
          table[static_cast<std::size_t>(x) * n + y] =
              g1.op(a1, a2) * g2.order + g2.op(b1, b2);
        }
  return FiniteGroup::from_table(n, std::move(table),
                                 g1.label + "x" + g2.label);
}

FiniteGroup symmetric_group_s3() {
  // permutations of {0,1,2} in lexicographic order, composed as p*q = p(q(.))
  std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                              {0, 2, 1},
                                              {1, 0, 2},
                                              {1, 2, 0},
                                              {2, 0, 1},
                                              {2, 1, 0}}};
  auto index_of = [&perms](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<Elem> table(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      table[static_cast<std::size_t>(i) * 6 + j] = index_of(c);
    }
  return FiniteGroup::from_table(6, std::move(table), "S3");
}

FiniteGroup dihedral_group_d4() {
  // 0..3 rotations, 4..7 reflections
  constexpr int n = 4;
  auto compose = [](int x, int y) {
    if (x < n && y < n) return (x + y) % n;
    if (x < n && y >= n) return (y - n + x) % n + n;
    if (x >= n && y < n) return (x - n - y + n) % n + n;
    return (x - y + n) % n;
  };
  std::vector<Elem> table(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      table[static_cast<std::size_t>(i) * 8 + j] = compose(i, j);
  return FiniteGroup::from_table(8, std::move(table), "D4");
}

FiniteGroup quaternion_group_q8() {
  // indices: 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  auto axis = [](int e) { return e / 2; };  // 0:scalar 1:i 2:j 3:k
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  auto code = [](int ax, int sg) { return ax * 2 + (sg < 0 ? 1 : 0); };
  // imaginary unit products: i*j = k, j*k = i, k*i = j and anticommute
  auto mul = [&](int x, int y) {
    int sg = sign(x) * sign(y);
    int ax = axis(x), ay = axis(y);
    if (ax == 0) return code(ay, sg);
    if (ay == 0) return code(ax, sg);
    if (ax == ay) return code(0, -sg);  // i*i = -1
    // distinct imaginary axes: result is the third axis
    int az = 6 - ax - ay;
    // (i,j), (j,k), (k,i) are the positively oriented pairs
    bool positive = (ax == 1 && ay == 2) || (ax == 2 && ay == 3) ||
                    (ax == 3 && ay == 1);
    return code(az, positive ? sg : -sg);
  };
  std::vector<Elem> table(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      table[static_cast<std::size_t>(i) * 8 + j] = mul(i, j);
  return FiniteGroup::from_table(8, std::move(table), "Q8");
}

namespace {

FiniteGroup named_atom(std::string_view name) {
  if (name == "S3") return symmetric_group_s3();
  if (name == "D4") return dihedral_group_d4();
  if (name == "Q8") return quaternion_group_q8();
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9')
        throw ParseError("unknown group name: " + std::string(name));
      n = n * 10 + (c - '0');
      if (n > kMaxOrder) throw ParseError("group order too large in name");
    }
    if (n >= 1) return cyclic_group(n);
  }
  throw ParseError("unknown group name: " + std::string(name));
}

}  // namespace

FiniteGroup named_group(std::string_view name) {
  std::vector<FiniteGroup> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t cut = name.find('x', start);
    if (cut == std::string_view::npos) cut = name.size();
    parts.push_back(named_atom(name.substr(start, cut - start)));
    start = cut + 1;
    if (cut == name.size()) break;
  }
  if (parts.empty()) throw ParseError("empty group name");
  FiniteGroup g = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, parts[i]);
  return g;
}

std::string to_cayley_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << g.order << "\n";
  for (Elem a = 0; a < g.order; ++a) {
    for (Elem b = 0; b < g.order; ++b) {
      if (b) out << ' ';
      out << g.op(a, b);
    }
    out << "\n";
  }
  return out.str();
}

FiniteGroup group_from_cayley_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string word;
  int order = 0;
  if (!(in >> word) || word != "order" || !(in >> order))
    throw ParseError("expected header line: order <n>");
  if (order < 1 || order > kMaxOrder) throw ParseError("bad order in table");
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(order) * order);
  Elem v = 0;
  while (in >> v) table.push_back(v);
  return FiniteGroup::from_table(order, std::move(table), std::move(label));
}

// ---------------------------------------------------------------------------
// subgroups

int Subgroup::size() const { return std::popcount(members); }

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  for (Elem g = 0; g < parent->order; ++g)
    if (contains(g)) out.push_back(g);
  return out;
}

std::uint64_t subgroup_closure(const FiniteGroup& g, std::uint64_t seed) {
  std::vector<Elem> elems;
  std::uint64_t mask = seed | (1ull << g.identity);
  for (Elem e = 0; e < g.order; ++e)
    if ((mask >> e) & 1u) elems.push_back(e);
  // product closure; inverses come for free in a finite group
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Elem p = g.op(elems[i], elems[j]);
      if (!((mask >> p) & 1u)) {
        mask |= 1ull << p;
        elems.push_back(p);
      }
    }
  }
  return mask;
}

bool is_subgroup_mask(const FiniteGroup& g, std::uint64_t mask) {
  if (!((mask >> g.identity) & 1u)) return false;
  return subgroup_closure(g, mask) == mask;
}

namespace {

std::uint64_t conjugate_mask(const FiniteGroup& g, std::uint64_t mask,
                             Elem by) {
  std::uint64_t out = 0;
  for (Elem h = 0; h < g.order; ++h)
    if ((mask >> h) & 1u) out |= 1ull << g.conjugate(by, h);
  return out;
}

}  // namespace

bool is_normal_mask(const FiniteGroup& g, std::uint64_t mask) {
  for (Elem a = 0; a < g.order; ++a)
    if (conjugate_mask(g, mask, a) != mask) return false;
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::uint64_t mask) {
  if (g.order > 64) throw BudgetError("subgroup masks require order <= 64");
  if (!is_subgroup_mask(g, mask))
    throw ParseError("element set is not a subgroup");
  Subgroup h;
  h.parent = &g;
  h.members = mask;
  h.normal = is_normal_mask(g, mask);
  h.index = g.order / h.size();
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return make_subgroup(g, 1ull << g.identity);
}

Subgroup full_subgroup(const FiniteGroup& g) {
  std::uint64_t mask = g.order == 64 ? ~0ull : (1ull << g.order) - 1;
  return make_subgroup(g, mask);
}

Subgroup subgroup_from_elements(const FiniteGroup& g,
                                const std::vector<Elem>& elems) {
  std::uint64_t mask = 0;
  for (Elem e : elems) {
    if (e < 0 || e >= g.order) throw ParseError("subgroup element out of range");
    mask |= 1ull << e;
  }
  return make_subgroup(g, mask);
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g,
                                          int order_bound) {
  if (g.order > order_bound || g.order > 64)
    throw BudgetError("subgroup enumeration bound exceeded for order " +
                      std::to_string(g.order));
  std::set<std::uint64_t> known;
  std::vector<std::uint64_t> frontier;
  const std::uint64_t triv = 1ull << g.identity;
  known.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    const std::uint64_t h = frontier.back();
    frontier.pop_back();
    for (Elem e = 0; e < g.order; ++e) {
      if ((h >> e) & 1u) continue;
      const std::uint64_t grown = subgroup_closure(g, h | (1ull << e));
      if (known.insert(grown).second) frontier.push_back(grown);
    }
  }
  std::vector<std::uint64_t> masks(known.begin(), known.end());
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(make_subgroup(g, m));
  return out;
}

SubgroupLatticeSummary lattice_summary(const FiniteGroup& g, int order_bound) {
  SubgroupLatticeSummary s;
  s.subgroups = enumerate_subgroups(g, order_bound);
  const int n = static_cast<int>(s.subgroups.size());

  // conjugacy classes, each listed by ascending subgroup index
  std::vector<int> class_of(n, -1);
  std::map<std::uint64_t, int> mask_index;
  for (int i = 0; i < n; ++i) mask_index[s.subgroups[i].members] = i;
  for (int i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    const int c = static_cast<int>(s.classes.size());
    std::set<int> cls;
    for (Elem a = 0; a < g.order; ++a)
      cls.insert(mask_index.at(conjugate_mask(g, s.subgroups[i].members, a)));
    for (int j : cls) class_of[j] = c;
    s.classes.emplace_back(cls.begin(), cls.end());
  }
  s.class_count = static_cast<int>(s.classes.size());

  for (const Subgroup& h : s.subgroups) {
    if (h.normal) ++s.normal_count;
    if (h.index == 2) ++s.index2_count;
  }

  // [H] <= [K]  iff  H is contained in some conjugate of K
  const int c = s.class_count;
  for (int i = 0; i < c; ++i) {
    const std::uint64_t h = s.subgroups[s.classes[i][0]].members;
    for (int j = 0; j < c; ++j) {
      for (int k : s.classes[j]) {
        const std::uint64_t m = s.subgroups[k].members;
        if ((h & m) == h) {
          s.order_relation.emplace(i, j);
          break;
        }
      }
    }
  }
  s.edge_count_all_pairs = static_cast<long>(s.order_relation.size());

  auto leq = [&s](int i, int j) {
    return s.order_relation.count({i, j}) > 0;
  };
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covering = true;
      for (int m = 0; m < c && covering; ++m)
        if (m != i && m != j && leq(i, m) && leq(m, j)) covering = false;
      if (covering) ++s.edge_count_hasse;
    }
  return s;
}

bool is_dedekind(const FiniteGroup& g, int order_bound) {
  for (const Subgroup& h : enumerate_subgroups(g, order_bound))
    if (!h.normal) return false;
  return true;
}

QuotientGroup make_quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent != &g) throw ParseError("subgroup belongs to another group");
  if (!n.normal) throw ParseError("quotient requires a normal subgroup");

  // coset of x = { n*x : n in N }, keyed by its smallest member
  std::vector<Elem> coset_min(g.order, -1);
  for (Elem x = 0; x < g.order; ++x) {
    Elem least = x;
    for (Elem e : n.elements()) least = std::min(least, g.op(e, x));
    coset_min[x] = least;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order; ++x)
    if (coset_min[x] == x) reps.push_back(x);

  const int m = static_cast<int>(reps.size());
  std::vector<Elem> proj(g.order);
  for (Elem x = 0; x < g.order; ++x) {
    const auto it = std::find(reps.begin(), reps.end(), coset_min[x]);
    proj[x] = static_cast<Elem>(it - reps.begin());
  }
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] = proj[g.op(reps[a], reps[b])];

  QuotientGroup q;
  q.source = &g;
  q.kernel = n;
  q.quotient = FiniteGroup::from_table(
      m, std::move(table), g.label + "/N" + std::to_string(n.size()));
  q.projection = std::move(proj);
  q.section = std::move(reps);
  return q;
}

ChainFamily chain_family(int m, int k_max, int order_bound) {
  if (m < 2) throw ParseError("chain modulus must be >= 2");
  if (k_max < 1) throw ParseError("chain depth must be >= 1");
  ChainFamily fam;
  fam.modulus = m;
  fam.depth = k_max;
  long long n = 1;
  for (int k = 1; k <= k_max; ++k) {
    n *= m;
    if (n > order_bound)
      throw BudgetError("chain order " + std::to_string(n) +
                        " exceeds bound " + std::to_string(order_bound));
    fam.quotients.push_back(cyclic_group(static_cast<int>(n)));
  }
  return fam;
}

std::vector<int> normal_count_along_chain(const ChainFamily& fam) {
  std::vector<int> out;
  out.reserve(fam.quotients.size());
  for (const FiniteGroup& q : fam.quotients) {
    int count = 0;
    for (const Subgroup& h : enumerate_subgroups(q))
      if (h.normal) ++count;
    out.push_back(count);
  }
  return out;
}

}  // namespace camon
