#include "camon/monoid.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "camon/errors.hpp"

namespace camon {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

FiniteMonoid FiniteMonoid::from_table(int size, std::vector<std::int32_t> op,
                                      std::string label) {
  if (size < 1) throw ParseError("monoid size must be positive");
  if (op.size() != static_cast<std::size_t>(size) * size)
    throw ParseError("composition table has wrong size");
  for (std::int32_t e : op)
    if (e < 0 || e >= size) throw ParseError("table entry out of range");

  FiniteMonoid m;
  m.size = size;
  m.op = std::move(op);
  m.label = std::move(label);

  if (size <= 512) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        for (int c = 0; c < size; ++c)
          if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c)))
            throw ParseError("operation is not associative");
  } else {
    std::mt19937_64 rng(0x5eedb00c);
    std::uniform_int_distribution<int> pick(0, size - 1);
    for (int t = 0; t < 200'000; ++t) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c)))
        throw ParseError("operation is not associative");
    }
  }

  int identity = -1;
  for (int e = 0; e < size; ++e) {
    bool neutral = true;
    for (int a = 0; a < size && neutral; ++a)
      neutral = m.at(e, a) == a && m.at(a, e) == a;
    if (neutral) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ParseError("table has no two-sided identity");
  m.identity = identity;
  return m;
}

UnitSets classify_units(const FiniteMonoid& m) {
  const int n = m.size;
  std::vector<char> left(n, 0), right(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.at(a, b) == m.identity) {
        left[b] = 1;   // b has left inverse a
        right[a] = 1;  // a has right inverse b
      }
  UnitSets out;
  for (int e = 0; e < n; ++e) {
    if (left[e]) out.left.push_back(e);
    if (right[e]) out.right.push_back(e);
    if (left[e] && right[e]) out.units.push_back(e);
  }
  // any element with inverses on both sides has them equal
  for (int u : out.units) {
    int some_left = -1, some_right = -1;
    for (int a = 0; a < n; ++a) {
      if (m.at(a, u) == m.identity && some_left < 0) some_left = a;
      if (m.at(u, a) == m.identity && some_right < 0) some_right = a;
    }
    if (some_left != some_right)
      throw ParseError("one-sided inverses disagree; table is inconsistent");
  }
  return out;
}

DirectFiniteness is_directly_finite(const FiniteMonoid& m) {
  DirectFiniteness out;
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (m.at(a, b) == m.identity && m.at(b, a) != m.identity) {
        out.directly_finite = false;
        out.counterexample = {a, b};
        return out;
      }
  return out;
}

LeMonoidsReport verify_le_monoids(const FiniteMonoid& m) {
  const UnitSets u = classify_units(m);
  LeMonoidsReport r;
  r.left_units_are_units = u.left == u.units;
  r.right_units_are_units = u.right == u.units;
  r.directly_finite = is_directly_finite(m).directly_finite;

  std::vector<char> is_unit(m.size, 0);
  for (int e : u.units) is_unit[e] = 1;
  r.nonunits_form_ideal = true;
  for (int x = 0; x < m.size && r.nonunits_form_ideal; ++x) {
    if (is_unit[x]) continue;
    for (int a = 0; a < m.size; ++a)
      if (is_unit[m.at(x, a)] || is_unit[m.at(a, x)]) {
        r.nonunits_form_ideal = false;
        break;
      }
  }
  r.all_ok = r.left_units_are_units && r.right_units_are_units &&
             r.nonunits_form_ideal && r.directly_finite;
  return r;
}

std::vector<char> closure_set(const FiniteMonoid& m, std::span<const int> gens,
                              long* steps) {
  std::vector<char> in(m.size, 0);
  std::vector<int> reached;
  in[m.identity] = 1;
  reached.push_back(m.identity);
  for (int g : gens) {
    if (g < 0 || g >= m.size) throw ParseError("generator index out of range");
    if (!in[g]) {
      in[g] = 1;
      reached.push_back(g);
    }
  }
  long local = 0;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (int g : gens) {
      const int p = m.at(reached[i], g);
      ++local;
      if (!in[p]) {
        in[p] = 1;
        reached.push_back(p);
      }
    }
  }
  if (steps) *steps += local;
  return in;
}

bool generates(const FiniteMonoid& m, std::span<const int> gens) {
  const std::vector<char> in = closure_set(m, gens);
  return std::find(in.begin(), in.end(), 0) == in.end();
}

namespace {

// Elements (other than the identity) that cannot be written as a product of
// two non-identity elements; they belong to every generating set.
std::vector<int> mandatory_generators(const FiniteMonoid& m) {
  std::vector<char> product(m.size, 0);
  for (int a = 0; a < m.size; ++a) {
    if (a == m.identity) continue;
    for (int b = 0; b < m.size; ++b) {
      if (b == m.identity) continue;
      product[m.at(a, b)] = 1;
    }
  }
  std::vector<int> out;
  for (int e = 0; e < m.size; ++e)
    if (e != m.identity && !product[e]) out.push_back(e);
  return out;
}

bool covered(const std::vector<char>& in) {
  return std::find(in.begin(), in.end(), 0) == in.end();
}

// Smallest W ⊆ candidates with <base ∪ mandatory ∪ W> = M, scanning subsets
// of each size in lexicographic order so the first hit is the least witness.
RankResult subset_search(const FiniteMonoid& m, std::span<const int> base,
                         const std::vector<int>& mandatory,
                         const std::vector<int>& candidates,
                         SearchBudget budget) {
  const auto start = Clock::now();
  RankResult res;
  std::vector<int> gens(base.begin(), base.end());
  gens.insert(gens.end(), mandatory.begin(), mandatory.end());

  auto finish_exact = [&](int extra, std::vector<int> extra_elems) {
    res.rank = static_cast<int>(mandatory.size()) + extra;
    res.lower_bound = res.upper_bound = *res.rank;
    res.witness = mandatory;
    res.witness.insert(res.witness.end(), extra_elems.begin(),
                       extra_elems.end());
    std::sort(res.witness.begin(), res.witness.end());
    res.seconds = elapsed_seconds(start);
  };

  if (covered(closure_set(m, gens, &res.steps))) {
    finish_exact(0, {});
    return res;
  }

  // greedy upper bound: extend by the first uncovered candidate
  std::vector<int> greedy_extras;
  {
    std::vector<int> greedy = gens;
    std::vector<char> in = closure_set(m, greedy, &res.steps);
    while (!covered(in)) {
      int next = -1;
      for (int cand : candidates)
        if (!in[cand]) {
          next = cand;
          break;
        }
      if (next < 0)
        throw ParseError("candidate pool cannot generate the monoid");
      greedy.push_back(next);
      greedy_extras.push_back(next);
      in = closure_set(m, greedy, &res.steps);
    }
    res.upper_bound =
        static_cast<int>(mandatory.size() + greedy_extras.size());
  }

  const int ncand = static_cast<int>(candidates.size());
  for (int k = 1;; ++k) {
    if (static_cast<int>(mandatory.size()) + k > res.upper_bound) {
      // every smaller size is refuted, so the greedy set is optimal
      finish_exact(static_cast<int>(greedy_extras.size()), greedy_extras);
      return res;
    }
    // entering level k: all sets of size mandatory+k-1 are refuted
    res.lower_bound = static_cast<int>(mandatory.size()) + k;
    // k-subsets of candidates in lexicographic order
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> trial = gens;
      for (int i : idx) trial.push_back(candidates[i]);
      if (covered(closure_set(m, trial, &res.steps))) {
        std::vector<int> extras;
        for (int i : idx) extras.push_back(candidates[i]);
        finish_exact(k, extras);
        return res;
      }
      if (res.steps > budget.max_steps) {
        res.seconds = elapsed_seconds(start);
        return res;  // inexact: bounds already reflect progress
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == ncand - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

RankResult rank(const FiniteMonoid& m, SearchBudget budget) {
  const std::vector<int> mandatory = mandatory_generators(m);
  std::vector<char> forced(m.size, 0);
  for (int e : mandatory) forced[e] = 1;
  std::vector<int> candidates;
  for (int e = 0; e < m.size; ++e)
    if (e != m.identity && !forced[e]) candidates.push_back(e);
  return subset_search(m, {}, mandatory, candidates, budget);
}

RankResult relative_rank(const FiniteMonoid& m, std::span<const int> base,
                         SearchBudget budget) {
  long steps = 0;
  const std::vector<char> reach = closure_set(m, base, &steps);
  const std::vector<int> all_mandatory = mandatory_generators(m);
  std::vector<char> forced(m.size, 0);
  std::vector<int> mandatory;
  for (int e : all_mandatory)
    if (!reach[e]) {
      mandatory.push_back(e);
      forced[e] = 1;
    }
  std::vector<int> candidates;
  for (int e = 0; e < m.size; ++e)
    if (!reach[e] && !forced[e]) candidates.push_back(e);
  RankResult res = subset_search(m, base, mandatory, candidates, budget);
  res.steps += steps;
  return res;
}

RankFormulaReport verify_rank_formula(const FiniteMonoid& m,
                                      SearchBudget budget) {
  RankFormulaReport rep;
  rep.whole = rank(m, budget);
  std::vector<int> unit_elems;
  const FiniteMonoid u = unit_group_monoid(m, &unit_elems);
  rep.units = rank(u, budget);
  rep.relative = relative_rank(m, unit_elems, budget);
  rep.all_exact =
      rep.whole.exact() && rep.units.exact() && rep.relative.exact();
  if (rep.all_exact)
    rep.equality = *rep.whole.rank == *rep.units.rank + *rep.relative.rank;
  return rep;
}

EpiBoundsReport epimorphism_rank_bounds(const FiniteMonoid& m1,
                                        const FiniteMonoid& m2,
                                        std::span<const int> phi,
                                        SearchBudget budget) {
  if (phi.size() != static_cast<std::size_t>(m1.size))
    throw ParseError("index map has wrong domain size");
  EpiBoundsReport rep;
  rep.homomorphism = phi[m1.identity] == m2.identity;
  for (int a = 0; a < m1.size && rep.homomorphism; ++a)
    for (int b = 0; b < m1.size; ++b)
      if (phi[m1.at(a, b)] != m2.at(phi[a], phi[b])) {
        rep.homomorphism = false;
        break;
      }
  std::vector<char> hit(m2.size, 0);
  for (int a = 0; a < m1.size; ++a) hit[phi[a]] = 1;
  rep.surjective = std::find(hit.begin(), hit.end(), 0) == hit.end();
  if (!rep.homomorphism || !rep.surjective)
    throw ParseError("map is not a monoid epimorphism");

  const UnitSets u1 = classify_units(m1);
  const UnitSets u2 = classify_units(m2);
  std::vector<char> is_unit2(m2.size, 0);
  for (int e : u2.units) is_unit2[e] = 1;
  rep.units_to_units = true;
  for (int e : u1.units)
    if (!is_unit2[phi[e]]) rep.units_to_units = false;

  rep.rank_source = rank(m1, budget);
  rep.rank_image = rank(m2, budget);
  rep.rel_source = relative_rank(m1, u1.units, budget);
  rep.rel_image = relative_rank(m2, u2.units, budget);
  rep.all_exact = rep.rank_source.exact() && rep.rank_image.exact() &&
                  rep.rel_source.exact() && rep.rel_image.exact();
  if (rep.all_exact) {
    rep.rank_bound_ok = *rep.rank_image.rank <= *rep.rank_source.rank;
    rep.rel_bound_ok = *rep.rel_image.rank <= *rep.rel_source.rank;
  }
  return rep;
}

FiniteMonoid full_transformation_monoid(int n) {
  if (n < 1 || n > 7) throw BudgetError("T_n supported for 1 <= n <= 7");
  int size = 1;
  for (int i = 0; i < n; ++i) size *= n;
  auto image = [n](int code, int x) {
    for (int i = 0; i < x; ++i) code /= n;
    return code % n;
  };
  std::vector<std::int32_t> op(static_cast<std::size_t>(size) * size);
  for (int f = 0; f < size; ++f)
    for (int g = 0; g < size; ++g) {
      int comp = 0, w = 1;
      for (int x = 0; x < n; ++x) {
        comp += image(f, image(g, x)) * w;  // (f*g)(x) = f(g(x))
        w *= n;
      }
      op[static_cast<std::size_t>(f) * size + g] = comp;
    }
  return FiniteMonoid::from_table(size, std::move(op),
                                  "T" + std::to_string(n));
}

FiniteMonoid unit_group_monoid(const FiniteMonoid& m,
                               std::vector<int>* unit_elements) {
  const UnitSets u = classify_units(m);
  const int k = static_cast<int>(u.units.size());
  std::vector<int> pos(m.size, -1);
  for (int i = 0; i < k; ++i) pos[u.units[i]] = i;
  std::vector<std::int32_t> op(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int p = m.at(u.units[i], u.units[j]);
      if (pos[p] < 0) throw ParseError("units are not closed; bad table");
      op[static_cast<std::size_t>(i) * k + j] = pos[p];
    }
  if (unit_elements) *unit_elements = u.units;
  return FiniteMonoid::from_table(k, std::move(op), m.label + ".units");
}

bool is_commutative(const FiniteMonoid& m) {
  for (int a = 0; a < m.size; ++a)
    for (int b = a + 1; b < m.size; ++b)
      if (m.at(a, b) != m.at(b, a)) return false;
  return true;
}

namespace {

int monoid_element_order(const FiniteMonoid& m, int g) {
  int x = g, k = 1;
  while (x != m.identity) {
    x = m.at(x, g);
    ++k;
    if (k > m.size) throw ParseError("element has no finite order to identity");
  }
  return k;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<long> abelian_invariant_factors(const FiniteMonoid& group) {
  if (!is_commutative(group))
    throw ParseError("invariant factors require an abelian group");
  const int n = group.size;
  if (n == 1) return {};
  std::vector<int> order(n);
  for (int g = 0; g < n; ++g) order[g] = monoid_element_order(group, g);

  // For each prime l, the partition (lambda_i) of the l-primary component is
  // recovered from s_j = log_l #{x : x^{l^j} = 1}: the number of parts >= j
  // equals s_j - s_{j-1}.
  std::map<long, std::vector<int>> partitions;
  for (long p : prime_factors(n)) {
    int e_max = 0;
    for (int g = 0; g < n; ++g) {
      long o = order[g];
      int e = 0;
      while (o % p == 0) {
        o /= p;
        ++e;
      }
      e_max = std::max(e_max, e);
    }
    std::vector<int> s(e_max + 1, 0);
    long lj = 1;
    for (int j = 1; j <= e_max; ++j) {
      lj *= p;
      int count = 0;  // elements of order dividing p^j; always a power of p
      for (int g = 0; g < n; ++g)
        if (lj % order[g] == 0) ++count;
      int e = 0;
      long c = count;
      while (c > 1) {
        c /= p;
        ++e;
      }
      s[j] = e;
    }
    std::vector<int> parts;
    for (int j = 1; j <= e_max; ++j) {
      const int at_least_j = s[j] - s[j - 1];
      while (static_cast<int>(parts.size()) < at_least_j) parts.push_back(0);
      for (int i = 0; i < at_least_j; ++i) ++parts[i];
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    if (!parts.empty()) partitions[p] = parts;
  }

  std::size_t count = 0;
  for (const auto& [p, parts] : partitions)
    count = std::max(count, parts.size());
  std::vector<long> factors(count, 1);
  for (const auto& [p, parts] : partitions)
    for (std::size_t i = 0; i < parts.size(); ++i) {
      long pw = 1;
      for (int e = 0; e < parts[i]; ++e) pw *= p;
      factors[i] *= pw;  // factors[0] is the largest invariant factor
    }
  std::sort(factors.begin(), factors.end());
  return factors;
}

int abelian_group_rank(const std::vector<long>& cyclic_orders) {
  std::map<long, int> hits;
  for (long n : cyclic_orders) {
    if (n < 1) throw ParseError("cyclic order must be >= 1");
    for (long p : prime_factors(n)) ++hits[p];
  }
  int best = 0;
  for (const auto& [p, c] : hits) best = std::max(best, c);
  return best;
}

std::string to_table_text(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "size " << m.size << "\n";
  out << "identity " << m.identity << "\n";
  for (int a = 0; a < m.size; ++a) {
    for (int b = 0; b < m.size; ++b) {
      if (b) out << ' ';
      out << m.at(a, b);
    }
    out << "\n";
  }
  return out.str();
}

FiniteMonoid monoid_from_table_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string word;
  int size = 0, identity = 0;
  if (!(in >> word) || word != "size" || !(in >> size))
    throw ParseError("expected header line: size <n>");
  if (!(in >> word) || word != "identity" || !(in >> identity))
    throw ParseError("expected header line: identity <k>");
  std::vector<std::int32_t> op;
  op.reserve(static_cast<std::size_t>(size) * size);
  std::int32_t v = 0;
  while (in >> v) op.push_back(v);
  FiniteMonoid m = FiniteMonoid::from_table(size, std::move(op),
                                            std::move(label));
  if (m.identity != identity)
    throw ParseError("declared identity disagrees with the table");
  return m;
}

}  // namespace camon
