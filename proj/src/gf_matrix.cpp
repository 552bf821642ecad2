#include "camon/gf_matrix.hpp"

#include <algorithm>

#include "camon/errors.hpp"

namespace camon {

GfMatrix gf_identity(int n) {
  GfMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

GfMatrix gf_add(const FiniteField& F, const GfMatrix& x, const GfMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw ParseError("matrix shape mismatch");
  GfMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i)
    out.a[i] = F.add(x.a[i], y.a[i]);
  return out;
}

GfMatrix gf_mul(const FiniteField& F, const GfMatrix& x, const GfMatrix& y) {
  if (x.cols != y.rows) throw ParseError("matrix shape mismatch");
  GfMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
    }
  return out;
}

namespace {

// reduced row echelon form in place; pivots are restricted to the first
// `pivot_cols` columns (all of them when negative). returns the pivot count
int eliminate(const FiniteField& F, GfMatrix& m, int pivot_cols = -1) {
  const int limit = pivot_cols < 0 ? m.cols : pivot_cols;
  int rank = 0;
  for (int col = 0; col < limit && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols; ++c)
      std::swap(m.at(pivot, c), m.at(rank, c));
    const int inv = F.inv(m.at(rank, col));
    for (int c = 0; c < m.cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const int f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int gf_rank(const FiniteField& F, GfMatrix m) { return eliminate(F, m); }

std::optional<GfMatrix> gf_inverse(const FiniteField& F, GfMatrix m) {
  if (m.rows != m.cols) throw ParseError("inverse requires a square matrix");
  const int n = m.rows;
  GfMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (eliminate(F, aug, n) < n) return std::nullopt;
  GfMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<std::vector<int>> gf_solve(const FiniteField& F, GfMatrix a,
                                         std::vector<int> b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw ParseError("right-hand side has wrong length");
  GfMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  eliminate(F, aug, a.cols);
  std::vector<int> x(a.cols, 0);
  for (int r = 0; r < aug.rows; ++r) {
    int pivot = -1;
    for (int c = 0; c < a.cols; ++c)
      if (aug.at(r, c) != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) {
      if (aug.at(r, a.cols) != 0) return std::nullopt;  // inconsistent row
      continue;
    }
    x[pivot] = aug.at(r, a.cols);  // free variables stay zero
  }
  return x;
}

bool GfRowSpace::insert(std::vector<int> row) {
  row = reduce(std::move(row));
  int pivot = -1;
  for (int c = 0; c < cols_; ++c)
    if (row[c] != 0) {
      pivot = c;
      break;
    }
  if (pivot < 0) return false;
  const int inv = F_->inv(row[pivot]);
  for (int& v : row) v = F_->mul(v, inv);
  // keep earlier rows reduced against the new pivot
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int f = rows_[r][pivot];
    if (f == 0) continue;
    for (int c = 0; c < cols_; ++c)
      rows_[r][c] = F_->sub(rows_[r][c], F_->mul(f, row[c]));
  }
  const auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), pivot);
  const std::size_t idx = static_cast<std::size_t>(pos - pivot_.begin());
  pivot_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

bool GfRowSpace::contains(std::vector<int> row) const {
  row = reduce(std::move(row));
  return std::all_of(row.begin(), row.end(), [](int v) { return v == 0; });
}

std::vector<int> GfRowSpace::reduce(std::vector<int> row) const {
  if (static_cast<int>(row.size()) != cols_)
    throw ParseError("row has wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int f = row[pivot_[r]];
    if (f == 0) continue;
    for (int c = 0; c < cols_; ++c)
      row[c] = F_->sub(row[c], F_->mul(f, rows_[r][c]));
  }
  return row;
}

}  // namespace camon
