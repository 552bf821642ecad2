#include "camon/poly.hpp"

#include <algorithm>
#include <sstream>

#include "camon/errors.hpp"

namespace camon {

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    out[i] = F.add(x, y);
  }
  return poly_trim(std::move(out));
}

Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = F.neg(b[i]);
  return poly_add(F, a, nb);
}

Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return poly_trim(std::move(out));
}

Poly poly_scale(const FiniteField& F, const Poly& a, int c) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const FiniteField& F, Poly num,
                                  const Poly& den) {
  if (den.empty()) throw ParseError("polynomial division by zero");
  const int dd = poly_deg(den);
  const int lead_inv = F.inv(den.back());
  Poly quot;
  while (poly_deg(num) >= dd) {
    const int shift = poly_deg(num) - dd;
    const int c = F.mul(num.back(), lead_inv);
    if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, 0);
    quot[shift] = F.add(quot[shift], c);
    for (int i = 0; i <= dd; ++i)
      num[shift + i] = F.sub(num[shift + i], F.mul(c, den[i]));
    num = poly_trim(std::move(num));
  }
  return {poly_trim(std::move(quot)), std::move(num)};
}

Poly poly_mod(const FiniteField& F, Poly num, const Poly& den) {
  return poly_divmod(F, std::move(num), den).second;
}

Poly poly_monic(const FiniteField& F, Poly f) {
  if (f.empty()) return f;
  return poly_scale(F, f, F.inv(f.back()));
}

Poly poly_gcd(const FiniteField& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, std::move(a));
}

Poly poly_powmod(const FiniteField& F, Poly base, unsigned long long e,
                 const Poly& mod) {
  Poly out = poly_mod(F, poly_one(), mod);
  base = poly_mod(F, std::move(base), mod);
  while (e > 0) {
    if (e & 1ull) out = poly_mod(F, poly_mul(F, out, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return out;
}

Poly poly_frobenius(const FiniteField& F, int iters, const Poly& mod) {
  Poly h = poly_mod(F, poly_x(), mod);
  for (int i = 0; i < iters; ++i)
    h = poly_powmod(F, h, static_cast<unsigned long long>(F.size()), mod);
  return h;
}

int poly_eval(const FiniteField& F, const Poly& f, int x) {
  int out = 0;
  for (std::size_t i = f.size(); i-- > 0;) out = F.add(F.mul(out, x), f[i]);
  return out;
}

Poly poly_one() { return {1}; }

Poly poly_x() { return {0, 1}; }

Poly poly_xn_minus_1(const FiniteField& F, int n) {
  if (n < 1) throw ParseError("exponent must be positive");
  Poly f(n + 1, 0);
  f[0] = F.neg(1);
  f[n] = 1;
  return f;
}

namespace {

// all monic polynomials of the given degree, in lexicographic order of the
// lower coefficient vector read as a base-q counter
class MonicRange {
 public:
  MonicRange(const FiniteField& F, int degree) : F_(F), degree_(degree) {
    count_ = 1;
    for (int i = 0; i < degree; ++i) count_ *= F.size();
  }
  long long count() const { return count_; }
  Poly at(long long index) const {
    Poly f(degree_ + 1, 0);
    for (int i = 0; i < degree_; ++i) {
      f[i] = static_cast<int>(index % F_.size());
      index /= F_.size();
    }
    f[degree_] = 1;
    return f;
  }

 private:
  const FiniteField& F_;
  int degree_;
  long long count_;
};

}  // namespace

bool poly_is_irreducible(const FiniteField& F, const Poly& f) {
  const int d = poly_deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int k = 1; 2 * k <= d; ++k) {
    const MonicRange divisors(F, k);
    for (long long i = 0; i < divisors.count(); ++i)
      if (poly_mod(F, f, divisors.at(i)).empty()) return false;
  }
  return true;
}

std::vector<PolyFactor> factor_xn_minus_1(const FiniteField& F, int n) {
  if (n < 1) throw ParseError("exponent must be positive");
  const int p = F.characteristic();
  // x^n - 1 = (x^m - 1)^(p^e) with n = m p^e, so the content to factor is
  // squarefree
  int m = n, power = 1;
  while (m % p == 0) {
    m /= p;
    power *= p;
  }

  std::vector<Poly> irreducibles;
  Poly remaining = poly_xn_minus_1(F, m);
  for (int d = 1; poly_deg(remaining) > 0; ++d) {
    if (poly_deg(remaining) < 2 * d) {
      // what remains is a single irreducible factor
      irreducibles.push_back(poly_monic(F, remaining));
      break;
    }
    // distinct-degree split: factors of degree d divide x^(q^d) - x
    const Poly frob = poly_frobenius(F, d, remaining);
    Poly part = poly_gcd(F, poly_sub(F, frob, poly_x()), remaining);
    if (poly_deg(part) <= 0) continue;
    remaining = poly_divmod(F, remaining, part).first;
    if (poly_deg(part) == d) {
      irreducibles.push_back(poly_monic(F, std::move(part)));
      continue;
    }
    // several factors of the same degree: split by trial division
    const MonicRange divisors(F, d);
    long long i = 0;
    while (poly_deg(part) > d && i < divisors.count()) {
      const Poly cand = divisors.at(i++);
      auto [q, r] = poly_divmod(F, part, cand);
      if (r.empty()) {
        irreducibles.push_back(cand);
        part = std::move(q);
      }
    }
    if (poly_deg(part) == d)
      irreducibles.push_back(poly_monic(F, std::move(part)));
  }

  std::sort(irreducibles.begin(), irreducibles.end(),
            [](const Poly& a, const Poly& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                  b.rbegin(), b.rend());
            });
  std::vector<PolyFactor> out;
  out.reserve(irreducibles.size());
  for (Poly& f : irreducibles)
    out.push_back({std::move(f), power});
  return out;
}

std::string poly_to_string(const FiniteField& F, const Poly& f) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || f[i] != 1) out << f[i];
    if (i >= 1) {
      if (f[i] != 1) out << "*";
      out << "x";
      if (i >= 2) out << "^" << i;
    }
  }
  (void)F;
  return out.str();
}

}  // namespace camon
