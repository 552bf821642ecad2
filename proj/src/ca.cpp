#include "camon/ca.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "camon/errors.hpp"
#include "camon/parallel.hpp"

namespace camon {

namespace {

constexpr std::int64_t kMaxConfigs = 1 << 20;

std::int64_t checked_pow(int q, int n, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > cap / q)
      throw BudgetError("configuration space exceeds supported size");
    v *= q;
  }
  return v;
}

bool bijective_flags(const std::vector<std::int32_t>& global, bool* injective,
                     bool* surjective) {
  std::vector<char> hit(global.size(), 0);
  bool inj = true;
  for (std::int32_t y : global) {
    if (hit[y]) inj = false;
    hit[y] = 1;
  }
  const bool surj = std::find(hit.begin(), hit.end(), 0) == hit.end();
  *injective = inj;
  *surjective = surj;
  return inj && surj;
}

}  // namespace

ShiftSpace::ShiftSpace(const FiniteGroup& g, int alphabet_size)
    : group(&g), q(alphabet_size) {
  if (q < 2) throw ParseError("alphabet needs at least two symbols");
  config_count = checked_pow(q, g.order, kMaxConfigs);
  pow_.resize(g.order + 1);
  pow_[0] = 1;
  for (int i = 1; i <= g.order; ++i) pow_[i] = pow_[i - 1] * q;
}

std::int64_t ShiftSpace::shift(Elem g, std::int64_t code) const {
  const FiniteGroup& G = *group;
  const Elem gi = G.inv(g);
  std::int64_t out = 0;
  for (Elem h = 0; h < G.order; ++h)
    out += static_cast<std::int64_t>(digit(code, G.op(gi, h))) * pow_[h];
  return out;
}

CellularAutomaton make_ca(const FiniteGroup& g, int q,
                          std::vector<std::uint8_t> rule) {
  const ShiftSpace space(g, q);
  if (rule.size() != static_cast<std::size_t>(space.config_count))
    throw ParseError("local rule table has wrong length");
  for (std::uint8_t s : rule)
    if (s >= q) throw ParseError("local rule symbol out of range");

  CellularAutomaton tau;
  tau.group = &g;
  tau.q = q;
  tau.rule = std::move(rule);
  tau.global.resize(space.config_count);
  // tau(x)(h) = mu(h^{-1}.x)
  for (std::int64_t x = 0; x < space.config_count; ++x) {
    std::int64_t y = 0;
    for (Elem h = 0; h < g.order; ++h) {
      const std::int64_t translated = space.shift(g.inv(h), x);
      y += static_cast<std::int64_t>(tau.rule[translated]) * space.pow_[h];
    }
    tau.global[x] = static_cast<std::int32_t>(y);
  }
  bijective_flags(tau.global, &tau.injective, &tau.surjective);
  return tau;
}

CellularAutomaton identity_ca(const FiniteGroup& g, int q) {
  return position_reader_ca(g, q, g.identity);
}

CellularAutomaton constant_ca(const FiniteGroup& g, int q, int symbol) {
  const ShiftSpace space(g, q);
  if (symbol < 0 || symbol >= q) throw ParseError("symbol out of range");
  return make_ca(g, q,
                 std::vector<std::uint8_t>(space.config_count,
                                           static_cast<std::uint8_t>(symbol)));
}

CellularAutomaton position_reader_ca(const FiniteGroup& g, int q, Elem s) {
  const ShiftSpace space(g, q);
  std::vector<std::uint8_t> rule(space.config_count);
  for (std::int64_t x = 0; x < space.config_count; ++x)
    rule[x] = static_cast<std::uint8_t>(space.digit(x, s));
  return make_ca(g, q, std::move(rule));
}

CellularAutomaton compose(const CellularAutomaton& s,
                          const CellularAutomaton& t) {
  if (s.group != t.group || s.q != t.q)
    throw ParseError("cannot compose automata over different shift spaces");
  const ShiftSpace space(*s.group, s.q);
  CellularAutomaton out;
  out.group = s.group;
  out.q = s.q;
  out.global.resize(space.config_count);
  for (std::int64_t x = 0; x < space.config_count; ++x)
    out.global[x] = s.global[t.global[x]];
  out.rule = extract_rule(space, out.global);
  bijective_flags(out.global, &out.injective, &out.surjective);
  return out;
}

std::vector<std::uint8_t> extract_rule(
    const ShiftSpace& space, const std::vector<std::int32_t>& global) {
  std::vector<std::uint8_t> rule(space.config_count);
  for (std::int64_t x = 0; x < space.config_count; ++x)
    rule[x] = static_cast<std::uint8_t>(
        space.digit(global[x], space.group->identity));
  return rule;
}

bool is_equivariant(const ShiftSpace& space,
                    const std::vector<std::int32_t>& global) {
  for (std::int64_t x = 0; x < space.config_count; ++x)
    for (Elem g = 0; g < space.group->order; ++g)
      if (global[space.shift(g, x)] != space.shift(g, global[x])) return false;
  return true;
}

std::uint64_t CellularAutomaton::rule_code() const {
  std::uint64_t code = 0, w = 1;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (i > 0 && w > (~0ull) / q)
      throw BudgetError("rule code does not fit in 64 bits");
    code += rule[i] * w;
    w *= q;
  }
  return code;
}

std::uint32_t CAMonoid::compose_index(std::uint32_t a, std::uint32_t b) const {
  if (has_table())
    return composition[static_cast<std::size_t>(a) * elements.size() + b];
  return static_cast<std::uint32_t>(
      compose(elements[a], elements[b]).rule_code());
}

std::uint64_t CAMonoid::identity_index() const {
  return identity_ca(*group, q).rule_code();
}

CAMonoid enumerate_end(const FiniteGroup& g, int q, const EndBudget& budget,
                       int workers) {
  const ShiftSpace space(g, q);
  // number of local rules = q^(q^|G|)
  std::int64_t count = 1;
  for (std::int64_t i = 0; i < space.config_count; ++i) {
    if (count > budget.max_elements / q)
      throw BudgetError("End(A^G) enumeration budget exceeded");
    count *= q;
  }

  CAMonoid monoid;
  monoid.group = &g;
  monoid.q = q;
  monoid.elements.resize(count);
  parallel_for(static_cast<std::size_t>(count), workers, [&](std::size_t code) {
    std::vector<std::uint8_t> rule(space.config_count);
    std::uint64_t c = code;
    for (std::int64_t i = 0; i < space.config_count; ++i) {
      rule[i] = static_cast<std::uint8_t>(c % q);
      c /= q;
    }
    monoid.elements[code] = make_ca(g, q, std::move(rule));
  });
  for (std::size_t i = 0; i < monoid.elements.size(); ++i)
    if (monoid.elements[i].unit())
      monoid.unit_indices.push_back(static_cast<std::uint32_t>(i));

  if (count <= budget.max_table_elements) {
    monoid.composition.assign(static_cast<std::size_t>(count) * count, 0);
    parallel_for(static_cast<std::size_t>(count), workers, [&](std::size_t a) {
      for (std::int64_t b = 0; b < count; ++b) {
        const CellularAutomaton c =
            compose(monoid.elements[a], monoid.elements[b]);
        monoid.composition[a * count + b] =
            static_cast<std::uint32_t>(c.rule_code());
      }
    });
  }
  return monoid;
}

FiniteMonoid to_finite_monoid(const CAMonoid& monoid) {
  if (!monoid.has_table())
    throw BudgetError("monoid has no composition table");
  const int n = static_cast<int>(monoid.elements.size());
  std::vector<std::int32_t> op(monoid.composition.begin(),
                               monoid.composition.end());
  return FiniteMonoid::from_table(
      n, std::move(op),
      "End(" + std::to_string(monoid.q) + "^" + monoid.group->label + ")");
}

namespace {

std::optional<CellularAutomaton> unit_witness(const CellularAutomaton& tau,
                                              const CAMonoid* ambient,
                                              bool left) {
  if (ambient) {
    const CellularAutomaton id = identity_ca(*tau.group, tau.q);
    for (const CellularAutomaton& sigma : ambient->elements) {
      const CellularAutomaton prod =
          left ? compose(sigma, tau) : compose(tau, sigma);
      if (prod.same_rule(id)) return sigma;
    }
    return std::nullopt;
  }
  // Over a finite configuration space a one-sided witness exists exactly when
  // tau is bijective, and then the inverse map is itself a CA.
  if (!tau.unit()) return std::nullopt;
  const ShiftSpace space(*tau.group, tau.q);
  std::vector<std::int32_t> inverse(tau.global.size());
  for (std::size_t x = 0; x < tau.global.size(); ++x)
    inverse[tau.global[x]] = static_cast<std::int32_t>(x);
  return make_ca(*tau.group, tau.q, extract_rule(space, inverse));
}

}  // namespace

std::optional<CellularAutomaton> left_unit_witness(const CellularAutomaton& tau,
                                                   const CAMonoid* ambient) {
  return unit_witness(tau, ambient, /*left=*/true);
}

std::optional<CellularAutomaton> right_unit_witness(
    const CellularAutomaton& tau, const CAMonoid* ambient) {
  return unit_witness(tau, ambient, /*left=*/false);
}

std::vector<std::int64_t> fixed_configurations(const FiniteGroup& g,
                                               const Subgroup& n, int q) {
  if (!n.normal) throw ParseError("fixed configurations need a normal subgroup");
  const ShiftSpace space(g, q);
  const std::vector<Elem> members = n.elements();
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < space.config_count; ++x) {
    bool fixed = true;
    for (Elem e : members)
      if (space.shift(e, x) != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

CellularAutomaton project_ca(const CellularAutomaton& tau,
                             const QuotientGroup& quo) {
  if (tau.group != quo.source)
    throw ParseError("automaton is not over the quotient's source group");
  const ShiftSpace src(*quo.source, tau.q);
  const ShiftSpace dst(quo.quotient, tau.q);

  std::vector<std::int32_t> global(dst.config_count);
  for (std::int64_t y = 0; y < dst.config_count; ++y) {
    // pull back along the projection: x(g) = y(gN)
    std::int64_t x = 0;
    for (Elem g = 0; g < quo.source->order; ++g)
      x += static_cast<std::int64_t>(dst.digit(y, quo.projection[g])) *
           src.pow_[g];
    const std::int64_t z = tau.global[x];
    // z is N-fixed; read it through the section
    std::int64_t img = 0;
    for (Elem c = 0; c < quo.quotient.order; ++c)
      img += static_cast<std::int64_t>(src.digit(z, quo.section[c])) *
             dst.pow_[c];
    global[y] = static_cast<std::int32_t>(img);
  }
  return make_ca(quo.quotient, tau.q, extract_rule(dst, global));
}

CellularAutomaton lift_ca(const CellularAutomaton& s, const QuotientGroup& quo) {
  if (s.group != &quo.quotient)
    throw ParseError("automaton is not over the quotient group");
  const ShiftSpace src(*quo.source, s.q);
  const ShiftSpace dst(quo.quotient, s.q);

  // mu(x) = nu(r(x)) where r reads each coset at its representative
  std::vector<std::uint8_t> rule(src.config_count);
  for (std::int64_t x = 0; x < src.config_count; ++x) {
    std::int64_t read = 0;
    for (Elem c = 0; c < quo.quotient.order; ++c)
      read += static_cast<std::int64_t>(src.digit(x, quo.section[c])) *
              dst.pow_[c];
    rule[x] = s.rule[read];
  }
  return make_ca(*quo.source, s.q, std::move(rule));
}

SurjunctivityReport surjunctivity_report(const CAMonoid& monoid) {
  SurjunctivityReport rep;
  rep.elements_checked = static_cast<std::int64_t>(monoid.elements.size());
  for (const CellularAutomaton& tau : monoid.elements)
    if (tau.injective != tau.surjective) rep.injective_iff_surjective = false;

  const std::uint64_t id = monoid.identity_index();
  const std::size_t n = monoid.elements.size();
  for (std::size_t a = 0; a < n && rep.directly_finite; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (monoid.compose_index(static_cast<std::uint32_t>(a),
                               static_cast<std::uint32_t>(b)) != id)
        continue;
      if (monoid.compose_index(static_cast<std::uint32_t>(b),
                               static_cast<std::uint32_t>(a)) != id) {
        rep.directly_finite = false;
        rep.counterexample = {static_cast<std::uint64_t>(a),
                              static_cast<std::uint64_t>(b)};
        break;
      }
    }
  return rep;
}

SurjunctivityReport surjunctivity_report(
    const std::vector<CellularAutomaton>& closed_set) {
  SurjunctivityReport rep;
  rep.full_monoid = false;
  rep.elements_checked = static_cast<std::int64_t>(closed_set.size());
  if (closed_set.empty()) return rep;
  for (const CellularAutomaton& tau : closed_set)
    if (tau.injective != tau.surjective) rep.injective_iff_surjective = false;

  const CellularAutomaton id =
      identity_ca(*closed_set.front().group, closed_set.front().q);
  for (std::size_t a = 0; a < closed_set.size() && rep.directly_finite; ++a)
    for (std::size_t b = 0; b < closed_set.size(); ++b) {
      if (!compose(closed_set[a], closed_set[b]).same_rule(id)) continue;
      if (!compose(closed_set[b], closed_set[a]).same_rule(id)) {
        rep.directly_finite = false;
        rep.counterexample = {a, b};
        break;
      }
    }
  return rep;
}

std::vector<CellularAutomaton> ca_closure(std::vector<CellularAutomaton> gens,
                                          std::int64_t max_elements) {
  if (gens.empty()) throw ParseError("ca_closure needs at least one generator");
  std::vector<CellularAutomaton> reached;
  std::map<std::vector<std::uint8_t>, std::size_t> seen;
  auto push = [&](CellularAutomaton ca) {
    if (seen.emplace(ca.rule, reached.size()).second) {
      reached.push_back(std::move(ca));
      if (static_cast<std::int64_t>(reached.size()) > max_elements)
        throw BudgetError("closure exceeded its element budget");
    }
  };
  push(identity_ca(*gens.front().group, gens.front().q));
  for (const CellularAutomaton& g : gens) push(g);
  for (std::size_t i = 0; i < reached.size(); ++i)
    for (const CellularAutomaton& g : gens) {
      // right-multiply: every word in the generators is reached
      push(compose(reached[i], g));
    }
  return reached;
}

std::string ca_to_string(const CellularAutomaton& tau) {
  if (tau.q > 10) throw ParseError("rule strings support alphabets up to 10");
  std::ostringstream out;
  out << tau.group->label << ' ' << tau.q << ' ';
  for (std::uint8_t s : tau.rule) out << static_cast<char>('0' + s);
  return out.str();
}

CellularAutomaton ca_from_string(const FiniteGroup& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string label, digits;
  int q = 0;
  if (!(in >> label >> q >> digits)) throw ParseError("bad rule string");
  if (label != g.label)
    throw ParseError("rule string group label '" + label +
                     "' does not match group '" + g.label + "'");
  std::vector<std::uint8_t> rule;
  rule.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("bad rule digit");
    rule.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return make_ca(g, q, std::move(rule));
}

}  // namespace camon
