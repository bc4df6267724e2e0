#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "dynhull/errors.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

/// Dense square matrix, column-major so column replacement touches a
/// contiguous range.
template <class S>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : n_(dim), e_(static_cast<std::size_t>(dim) * dim) {}

  static SquareMatrix identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = S(1);
    return m;
  }

  /// Row-major construction, for literals in tests and docs.
  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    SquareMatrix m(static_cast<int>(rows.size()));
    int r = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.n_) throw DimensionMismatch("ragged row literal");
      int c = 0;
      for (const auto& v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  }

  int dim() const { return n_; }

  const S& operator()(int r, int c) const { return e_[static_cast<std::size_t>(c) * n_ + r]; }
  S& operator()(int r, int c) { return e_[static_cast<std::size_t>(c) * n_ + r]; }

  std::span<const S> column(int c) const {
    return {e_.data() + static_cast<std::size_t>(c) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<S> column(int c) {
    return {e_.data() + static_cast<std::size_t>(c) * n_, static_cast<std::size_t>(n_)};
  }

  void set_column(int c, std::span<const S> v) {
    if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("column length != dim");
    auto dst = column(c);
    for (int i = 0; i < n_; ++i) dst[i] = v[i];
  }

  bool operator==(const SquareMatrix&) const = default;

  std::size_t bytes_estimate() const {
    std::size_t b = 0;
    for (const auto& s : e_) b += s.bytes_estimate();
    return b;
  }

 private:
  int n_ = 0;
  std::vector<S> e_;
};

/// A * v. Exact; cost d^2 fused multiplications.
template <class S>
std::vector<S> mat_vec(const SquareMatrix<S>& a, std::span<const S> v) {
  const int n = a.dim();
  if (static_cast<int>(v.size()) != n) throw DimensionMismatch("mat_vec length mismatch");
  std::vector<S> out(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    auto col = a.column(c);
    for (int r = 0; r < n; ++r) out[r].add_mul(col[r], v[c]);
  }
  return out;
}

/// Dot product of row `row` with v: exactly d multiplications and d-1
/// additions, no fusing. This is the O(d) determinant peek primitive.
template <class S>
S row_times_vec(const SquareMatrix<S>& a, int row, std::span<const S> v) {
  const int n = a.dim();
  if (n == 0) throw DimensionMismatch("row_times_vec on empty matrix");
  if (static_cast<int>(v.size()) != n) throw DimensionMismatch("row_times_vec length mismatch");
  if (row < 0 || row >= n) throw DimensionMismatch("row index out of range");
  S acc = a(row, 0) * v[0];
  for (int c = 1; c < n; ++c) acc += a(row, c) * v[c];
  return acc;
}

}  // namespace dynhull
