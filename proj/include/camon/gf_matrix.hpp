#ifndef CAMON_GF_MATRIX_HPP_
#define CAMON_GF_MATRIX_HPP_

#include <optional>
#include <vector>

#include "camon/finite_field.hpp"

namespace camon {

/// Dense matrix of field element codes.  All elimination is exact; any
/// nonzero entry can serve as a pivot.
struct GfMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;

  GfMatrix() = default;
  GfMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const GfMatrix&) const = default;
};

GfMatrix gf_identity(int n);
GfMatrix gf_add(const FiniteField& F, const GfMatrix& x, const GfMatrix& y);
GfMatrix gf_mul(const FiniteField& F, const GfMatrix& x, const GfMatrix& y);
int gf_rank(const FiniteField& F, GfMatrix m);
std::optional<GfMatrix> gf_inverse(const FiniteField& F, GfMatrix m);
/// One solution of A x = b, if any.
std::optional<std::vector<int>> gf_solve(const FiniteField& F, GfMatrix a,
                                         std::vector<int> b);

/// Incremental row space in reduced echelon form; used for subspace
/// dimension and membership questions.
class GfRowSpace {
 public:
  GfRowSpace(const FiniteField& F, int cols) : F_(&F), cols_(cols) {}
  /// Returns true when the row enlarged the space.
  bool insert(std::vector<int> row);
  bool contains(std::vector<int> row) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<int> reduce(std::vector<int> row) const;
  const FiniteField* F_;
  int cols_;
  std::vector<std::vector<int>> rows_;  // echelon rows, pivot positions ascending
  std::vector<int> pivot_;              // pivot column of each row
};

}  // namespace camon

#endif  // CAMON_GF_MATRIX_HPP_
