#include "camon/laurent.hpp"

#include <sstream>

#include "camon/errors.hpp"
#include "camon/gf_matrix.hpp"

namespace camon {

Laurent laurent_trim(Laurent f) {
  for (auto it = f.begin(); it != f.end();)
    it = it->second == 0 ? f.erase(it) : std::next(it);
  return f;
}

Laurent laurent_add(const FiniteField& F, const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b) {
    const auto it = out.find(e);
    out[e] = F.add(it == out.end() ? 0 : it->second, c);
  }
  return laurent_trim(std::move(out));
}

Laurent laurent_sub(const FiniteField& F, const Laurent& a, const Laurent& b) {
  Laurent nb;
  for (const auto& [e, c] : b) nb[e] = F.neg(c);
  return laurent_add(F, a, nb);
}

Laurent laurent_mul(const FiniteField& F, const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const int e = ea + eb;
      const auto it = out.find(e);
      out[e] = F.add(it == out.end() ? 0 : it->second, F.mul(ca, cb));
    }
  return laurent_trim(std::move(out));
}

Laurent laurent_monomial(int coeff, int exponent) {
  Laurent f;
  if (coeff != 0) f[exponent] = coeff;
  return f;
}

bool laurent_is_zero(const Laurent& f) { return laurent_trim(f).empty(); }

bool laurent_is_monomial_unit(const FiniteField& F, const Laurent& f) {
  const Laurent t = laurent_trim(f);
  return t.size() == 1 && t.begin()->second != 0 &&
         t.begin()->second < F.size();
}

std::optional<Laurent> laurent_inverse_within(const FiniteField& F,
                                              const Laurent& f,
                                              int degree_bound) {
  const Laurent a = laurent_trim(f);
  if (a.empty()) throw ParseError("zero Laurent polynomial has no inverse");
  const int lo = a.begin()->first, hi = a.rbegin()->first;
  const int B = degree_bound;
  const int unknowns = 2 * B + 1;  // h supported on [-B, B]
  const int row_lo = lo - B, row_hi = hi + B;
  const int rows = row_hi - row_lo + 1;

  // (f*h)(e) = sum_{i+j=e} f(i) h(j) must equal [e == 0]
  GfMatrix m(rows, unknowns);
  std::vector<int> rhs(rows, 0);
  for (const auto& [i, c] : a)
    for (int j = -B; j <= B; ++j) m.at(i + j - row_lo, j + B) = c;
  if (0 - row_lo >= 0 && 0 - row_lo < rows) rhs[0 - row_lo] = 1;

  const auto x = gf_solve(F, m, rhs);
  if (!x) return std::nullopt;
  Laurent h;
  for (int j = -B; j <= B; ++j)
    if ((*x)[j + B] != 0) h[j] = (*x)[j + B];
  // confirm
  const Laurent prod = laurent_mul(F, a, h);
  if (prod.size() != 1 || prod.begin()->first != 0 ||
      prod.begin()->second != 1)
    return std::nullopt;
  return h;
}

bool laurent_is_unit(const FiniteField& F, const Laurent& f, int degree_bound) {
  const Laurent t = laurent_trim(f);
  if (t.empty()) throw ParseError("zero Laurent polynomial is not a unit");
  const bool structural = laurent_is_monomial_unit(F, t);
  const bool searched = laurent_inverse_within(F, t, degree_bound).has_value();
  if (structural != searched)
    throw ParseError("unit test routes disagree; degree bound too small");
  return structural;
}

namespace {

Laurent det_recursive(const FiniteField& F, const std::vector<Laurent>& m,
                      std::vector<int> cols, int row, int n) {
  if (static_cast<int>(cols.size()) == 1)
    return m[static_cast<std::size_t>(row) * n + cols[0]];
  Laurent out;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Laurent& entry = m[static_cast<std::size_t>(row) * n + cols[k]];
    if (laurent_is_zero(entry)) continue;
    std::vector<int> rest;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    const Laurent minor = det_recursive(F, m, rest, row + 1, n);
    Laurent term = laurent_mul(F, entry, minor);
    if (k % 2 == 1) {
      Laurent neg;
      for (const auto& [e, c] : term) neg[e] = F.neg(c);
      term = std::move(neg);
    }
    out = laurent_add(F, out, term);
  }
  return out;
}

}  // namespace

Laurent laurent_det(const FiniteField& F, const std::vector<Laurent>& entries,
                    int n) {
  if (n < 1 || entries.size() != static_cast<std::size_t>(n) * n)
    throw ParseError("determinant requires a square matrix");
  if (n > 8) throw BudgetError("cofactor determinant supported up to 8x8");
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return det_recursive(F, entries, cols, 0, n);
}

std::string laurent_to_string(const Laurent& f) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f) {
    if (!first) out << " + ";
    first = false;
    if (e == 0 || c != 1) out << c;
    if (e != 0) {
      if (c != 1) out << "*";
      out << "x";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace camon
