#include "camon/group_ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "camon/errors.hpp"
#include "camon/monoid.hpp"
#include "camon/parallel.hpp"

namespace camon {

CoefficientRing CoefficientRing::field_ring(FiniteField f) {
  return CoefficientRing(Kind::field, std::move(f), 1);
}

CoefficientRing CoefficientRing::matrix_ring(FiniteField f, int d) {
  if (d < 1) throw ParseError("matrix dimension must be >= 1");
  CoefficientRing r(d == 1 ? Kind::field : Kind::matrix, std::move(f), d);
  if (r.size() > (1ll << 30))
    throw BudgetError("coefficient ring too large to code");
  return r;
}

long long CoefficientRing::size() const {
  long long s = 1;
  for (int i = 0; i < d * d; ++i) s *= F.size();
  return s;
}

GfMatrix CoefficientRing::to_matrix(int code) const {
  GfMatrix m(d, d);
  for (int i = 0; i < d * d; ++i) {
    m.a[i] = code % F.size();
    code /= F.size();
  }
  return m;
}

int CoefficientRing::from_matrix(const GfMatrix& m) const {
  int code = 0;
  for (int i = d * d; i-- > 0;) code = code * F.size() + m.a[i];
  return code;
}

int CoefficientRing::one() const { return from_matrix(gf_identity(d)); }

int CoefficientRing::add(int a, int b) const {
  if (d == 1) return F.add(a, b);
  return from_matrix(gf_add(F, to_matrix(a), to_matrix(b)));
}

int CoefficientRing::neg(int a) const {
  if (d == 1) return F.neg(a);
  GfMatrix m = to_matrix(a);
  for (int& v : m.a) v = F.neg(v);
  return from_matrix(m);
}

int CoefficientRing::mul(int a, int b) const {
  if (d == 1) return F.mul(a, b);
  return from_matrix(gf_mul(F, to_matrix(a), to_matrix(b)));
}

bool CoefficientRing::is_unit(int a) const {
  if (d == 1) return a != 0;
  return gf_rank(F, to_matrix(a)) == d;
}

GroupRing::GroupRing(CoefficientRing r, const FiniteGroup& g)
    : R_(std::move(r)), G_(&g) {}

GroupRing::Element GroupRing::one() const {
  return monomial(R_.one(), G_->identity);
}

GroupRing::Element GroupRing::monomial(int c, Elem g) const {
  if (g < 0 || g >= G_->order) throw ParseError("group element out of range");
  Element a(G_->order, 0);
  a[g] = c;
  return a;
}

GroupRing::Element GroupRing::add(const Element& a, const Element& b) const {
  Element out(G_->order);
  for (int g = 0; g < G_->order; ++g) out[g] = R_.add(a[g], b[g]);
  return out;
}

GroupRing::Element GroupRing::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

GroupRing::Element GroupRing::neg(const Element& a) const {
  Element out(G_->order);
  for (int g = 0; g < G_->order; ++g) out[g] = R_.neg(a[g]);
  return out;
}

GroupRing::Element GroupRing::mul(const Element& a, const Element& b) const {
  Element out(G_->order, 0);
  for (int g = 0; g < G_->order; ++g) {
    if (a[g] == 0) continue;
    for (int h = 0; h < G_->order; ++h) {
      if (b[h] == 0) continue;
      const Elem gh = G_->op(g, h);
      out[gh] = R_.add(out[gh], R_.mul(a[g], b[h]));
    }
  }
  return out;
}

bool GroupRing::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

int GroupRing::augmentation(const Element& a) const {
  int s = R_.zero();
  for (int c : a) s = R_.add(s, c);
  return s;
}

unsigned long long GroupRing::element_count() const {
  unsigned long long count = 1;
  const unsigned long long base = static_cast<unsigned long long>(R_.size());
  for (int i = 0; i < G_->order; ++i) {
    if (count > (1ull << 62) / base)
      throw BudgetError("group ring too large to enumerate");
    count *= base;
  }
  return count;
}

GroupRing::Element GroupRing::decode(unsigned long long code) const {
  const unsigned long long base = static_cast<unsigned long long>(R_.size());
  Element a(G_->order);
  for (int g = 0; g < G_->order; ++g) {
    a[g] = static_cast<int>(code % base);
    code /= base;
  }
  return a;
}

unsigned long long GroupRing::encode(const Element& a) const {
  const unsigned long long base = static_cast<unsigned long long>(R_.size());
  unsigned long long code = 0;
  for (int g = G_->order; g-- > 0;) code = code * base + a[g];
  return code;
}

std::vector<int> GroupRing::to_fq_vector(const Element& a) const {
  const int dim = R_.fq_dim();
  std::vector<int> v(static_cast<std::size_t>(G_->order) * dim);
  for (int g = 0; g < G_->order; ++g) {
    int code = a[g];
    for (int i = 0; i < dim; ++i) {
      v[static_cast<std::size_t>(g) * dim + i] = code % R_.F.size();
      code /= R_.F.size();
    }
  }
  return v;
}

GroupRing::Element GroupRing::from_fq_vector(std::span<const int> v) const {
  const int dim = R_.fq_dim();
  if (v.size() != static_cast<std::size_t>(G_->order) * dim)
    throw ParseError("vector has wrong length");
  Element a(G_->order, 0);
  for (int g = 0; g < G_->order; ++g) {
    int code = 0;
    for (int i = dim; i-- > 0;)
      code = code * R_.F.size() + v[static_cast<std::size_t>(g) * dim + i];
    a[g] = code;
  }
  return a;
}

GfMatrix GroupRing::left_multiplication_matrix(const Element& a) const {
  const int dim = R_.fq_dim();
  const int n = G_->order * dim;
  GfMatrix m(n, n);
  for (int h = 0; h < G_->order; ++h)
    for (int i = 0; i < dim; ++i) {
      // basis element: coefficient with a single 1 in F_q-slot i, at h
      int code = 1;
      for (int k = 0; k < i; ++k) code *= R_.F.size();
      const Element image = mul(a, monomial(code, h));
      const std::vector<int> v = to_fq_vector(image);
      const int col = h * dim + i;
      for (int row = 0; row < n; ++row) m.at(row, col) = v[row];
    }
  return m;
}

std::optional<GroupRing::Element> GroupRing::inverse(const Element& a) const {
  const GfMatrix m = left_multiplication_matrix(a);
  const std::vector<int> rhs = to_fq_vector(one());
  const auto x = gf_solve(R_.F, m, rhs);
  if (!x) return std::nullopt;
  const Element b = from_fq_vector(*x);
  if (!(mul(a, b) == one()) || !(mul(b, a) == one())) return std::nullopt;
  return b;
}

bool GroupRing::is_unit(const Element& a) const { return inverse(a).has_value(); }

bool GroupRing::is_trivial_unit(const Element& a) const {
  int support = 0, coeff = 0;
  for (int c : a)
    if (c != 0) {
      ++support;
      coeff = c;
    }
  return support == 1 && R_.is_unit(coeff);
}

std::string GroupRing::element_to_string(const Element& a) const {
  std::ostringstream out;
  for (int g = 0; g < G_->order; ++g) {
    if (g) out << ' ';
    out << a[g];
  }
  return out.str();
}

GroupRing::Element GroupRing::element_from_string(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Element a;
  int c = 0;
  while (in >> c) a.push_back(c);
  if (static_cast<int>(a.size()) != G_->order)
    throw ParseError("coefficient list has wrong length");
  for (int c2 : a)
    if (c2 < 0 || c2 >= R_.size()) throw ParseError("coefficient out of range");
  return a;
}

namespace {

// multiplication table of the unit group, reindexed 0..k-1
FiniteMonoid unit_table(const GroupRing& ring,
                        const std::vector<unsigned long long>& units) {
  const int k = static_cast<int>(units.size());
  std::map<unsigned long long, int> pos;
  for (int i = 0; i < k; ++i) pos[units[i]] = i;
  std::vector<std::int32_t> op(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    const GroupRing::Element a = ring.decode(units[i]);
    for (int j = 0; j < k; ++j) {
      const GroupRing::Element b = ring.decode(units[j]);
      op[static_cast<std::size_t>(i) * k + j] =
          pos.at(ring.encode(ring.mul(a, b)));
    }
  }
  return FiniteMonoid::from_table(k, std::move(op), "units");
}

}  // namespace

UnitReport units_of_group_ring(const GroupRing& ring,
                               unsigned long long budget, int workers) {
  UnitReport rep;
  rep.ring_size = ring.element_count();

  if (rep.ring_size <= budget) {
    std::vector<char> unit_flags(rep.ring_size, 0);
    parallel_for(static_cast<std::size_t>(rep.ring_size), workers,
                 [&](std::size_t code) {
                   unit_flags[code] = ring.is_unit(ring.decode(code)) ? 1 : 0;
                 });
    for (unsigned long long code = 0; code < rep.ring_size; ++code)
      if (unit_flags[code]) rep.units.push_back(code);
  } else {
    rep.exhaustive = false;
    // fall back to the units that are visible without a full scan
    for (int g = 0; g < ring.group().order; ++g)
      for (int c = 1; c < ring.coeff().size(); ++c) {
        if (!ring.coeff().is_unit(c)) continue;
        rep.units.push_back(ring.encode(ring.monomial(c, g)));
      }
    std::sort(rep.units.begin(), rep.units.end());
  }

  for (unsigned long long code : rep.units)
    if (ring.is_trivial_unit(ring.decode(code)))
      rep.trivial_units.push_back(code);
  rep.all_trivial = rep.exhaustive && rep.units == rep.trivial_units;
  rep.unit_group_order = static_cast<long>(rep.units.size());

  if (rep.exhaustive && rep.units.size() <= 4096) {
    const FiniteMonoid u = unit_table(ring, rep.units);
    rep.unit_group_abelian = is_commutative(u);
    if (rep.unit_group_abelian)
      rep.invariant_factors = abelian_invariant_factors(u);
  }
  return rep;
}

GroupRing::Element collapse_element(const GroupRing& src,
                                    const QuotientGroup& quo,
                                    const GroupRing& dst,
                                    const GroupRing::Element& a) {
  GroupRing::Element out = dst.zero();
  for (int g = 0; g < src.group().order; ++g) {
    const Elem c = quo.projection[g];
    out[c] = dst.coeff().add(out[c], a[g]);
  }
  return out;
}

AugmentationIdealReport augmentation_ideal(const GroupRing& src,
                                           const QuotientGroup& quo) {
  if (&src.group() != quo.source)
    throw ParseError("quotient does not match the ring's group");
  const GroupRing dst(src.coeff(), quo.quotient);
  const FiniteField& F = src.coeff().F;
  const int dim = src.coeff().fq_dim();
  const int n = src.group().order;

  AugmentationIdealReport rep;
  rep.dim_total = n * dim;
  rep.dim_quotient = quo.quotient.order * dim;

  // span of (g - rep(g)) x unit coefficients, as an F_q-row space
  GfRowSpace span(F, rep.dim_total);
  for (int g = 0; g < n; ++g) {
    const Elem r = quo.section[quo.projection[g]];
    if (r == g) continue;
    for (int i = 0; i < dim; ++i) {
      int code = 1;
      for (int k = 0; k < i; ++k) code *= F.size();
      const GroupRing::Element diff =
          src.sub(src.monomial(code, g), src.monomial(code, r));
      span.insert(src.to_fq_vector(diff));
    }
  }
  rep.dim_kernel = span.rank();

  // kernel of the collapse map equals the span: dimensions match by
  // rank-nullity once the collapse matrix has full image rank, and the span
  // is contained in the kernel by construction
  GfMatrix collapse_matrix(rep.dim_quotient, rep.dim_total);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < dim; ++i) {
      int code = 1;
      for (int k = 0; k < i; ++k) code *= F.size();
      const std::vector<int> img =
          dst.to_fq_vector(collapse_element(src, quo, dst, src.monomial(code, g)));
      for (int row = 0; row < rep.dim_quotient; ++row)
        collapse_matrix.at(row, g * dim + i) = img[row];
    }
  const int image_rank = gf_rank(F, collapse_matrix);
  rep.collapse_surjective = image_rank == rep.dim_quotient;
  bool span_in_kernel = true;
  {
    // every spanned vector collapses to zero
    // (basis rows suffice by linearity)
    for (int g = 0; g < n; ++g) {
      const Elem r = quo.section[quo.projection[g]];
      if (r == g) continue;
      const GroupRing::Element diff =
          src.sub(src.monomial(src.coeff().one(), g),
                  src.monomial(src.coeff().one(), r));
      if (!dst.is_zero(collapse_element(src, quo, dst, diff)))
        span_in_kernel = false;
    }
  }
  rep.kernel_matches_span =
      span_in_kernel && rep.dim_kernel + image_rank == rep.dim_total;

  // two-sided: x * b and b * x stay in the span for basis b and monomial x
  rep.two_sided = true;
  for (int g = 0; g < n && rep.two_sided; ++g) {
    const Elem r = quo.section[quo.projection[g]];
    if (r == g) continue;
    const GroupRing::Element diff =
        src.sub(src.monomial(src.coeff().one(), g),
                src.monomial(src.coeff().one(), r));
    for (int x = 0; x < n && rep.two_sided; ++x) {
      const GroupRing::Element mono = src.monomial(src.coeff().one(), x);
      if (!span.contains(src.to_fq_vector(src.mul(mono, diff))) ||
          !span.contains(src.to_fq_vector(src.mul(diff, mono))))
        rep.two_sided = false;
    }
  }

  // multiplicativity of the collapse on monomial pairs (bilinear extension)
  rep.collapse_multiplicative = true;
  for (int g = 0; g < n && rep.collapse_multiplicative; ++g)
    for (int h = 0; h < n; ++h) {
      const GroupRing::Element a = src.monomial(src.coeff().one(), g);
      const GroupRing::Element b = src.monomial(src.coeff().one(), h);
      const GroupRing::Element lhs =
          collapse_element(src, quo, dst, src.mul(a, b));
      const GroupRing::Element rhs = dst.mul(collapse_element(src, quo, dst, a),
                                             collapse_element(src, quo, dst, b));
      if (!(lhs == rhs)) {
        rep.collapse_multiplicative = false;
        break;
      }
    }

  rep.ok = rep.two_sided && rep.kernel_matches_span &&
           rep.collapse_multiplicative && rep.collapse_surjective &&
           rep.dim_kernel + rep.dim_quotient == rep.dim_total;
  return rep;
}

long long PerlisWalkerDecomposition::unit_count() const {
  long long c = 1;
  for (long f : unit_factors) c *= f;
  return c;
}

PerlisWalkerDecomposition perlis_walker(const FiniteField& F, int n) {
  PerlisWalkerDecomposition out;
  out.n = n;
  out.q = F.size();
  out.factors = factor_xn_minus_1(F, n);
  out.semisimple = n % F.characteristic() != 0;

  long total_degree = 0;
  for (const PolyFactor& pf : out.factors)
    total_degree += static_cast<long>(poly_deg(pf.factor)) * pf.multiplicity;
  if (total_degree != n)
    throw std::logic_error("factor degrees do not sum to n");
  if (!out.semisimple) return out;

  out.t = static_cast<int>(out.factors.size());
  for (const PolyFactor& pf : out.factors) {
    long size = 1;
    for (int i = 0; i < poly_deg(pf.factor); ++i) size *= F.size();
    out.summand_sizes.push_back(size);
    out.unit_factors.push_back(size - 1);
  }
  out.abelian_rank = abelian_group_rank(out.unit_factors);

  // each divisor of n contributes at least one cyclotomic layer
  int divisors = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++divisors;
  if (out.t < divisors)
    throw std::logic_error("fewer summands than divisors of n");
  return out;
}

}  // namespace camon
