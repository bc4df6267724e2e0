#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dynhull/determinants.hpp"
#include "dynhull/errors.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

/// Replacement of one column by new values.
template <class S>
struct ColumnUpdate {
  int col = 0;
  std::vector<S> values;
};

/// Maintains (A, adj(A), det(A)) under column replacements. Ring scalars
/// suffice: the only divisions are by det(A), and those are exact.
///
/// Invariants: det != 0 and A * adj = det * I.
template <class S>
class DynAdjState {
 public:
  const SquareMatrix<S>& matrix() const { return a_; }
  const SquareMatrix<S>& adjugate() const { return adj_; }
  const S& det() const { return det_; }
  int dim() const { return a_.dim(); }

  std::size_t bytes_estimate() const {
    return a_.bytes_estimate() + adj_.bytes_estimate() + det_.bytes_estimate();
  }

  /// Applies the update in place. Validates first: on SingularUpdate the
  /// state is untouched. Cost: d^2 + 1 fused multiplications, 3d^2 ring
  /// ops for the adjugate rows, of which exactly d^2 are exact divisions.
  void apply(const ColumnUpdate<S>& u) {
    const int n = a_.dim();
    if (u.col < 0 || u.col >= n) throw DimensionMismatch("update column out of range");
    if (static_cast<int>(u.values.size()) != n) throw DimensionMismatch("update length != dim");
    const int i = u.col;
    // v = adj * u; its i-th entry is the new determinant (matrix
    // determinant lemma in adjugate form).
    std::vector<S> v = mat_vec(adj_, std::span<const S>(u.values));
    S det_new = v[i];
    if (det_new.is_zero()) throw SingularUpdate("column replacement makes the matrix singular");
    v[i] -= det_;  // now v = adj * (u - old column i)
    // adj'[k][j] = (adj[k][j] * det_new - v[k] * adj[i][j]) / det.
    // Rows k != i first; they read row i of the old adjugate, which is
    // updated last (for k == i the formula degenerates to the same shape,
    // entry-local, so in-place is safe).
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < n; ++k) {
        if ((pass == 0) == (k == i)) continue;
        for (int j = 0; j < n; ++j) {
          S t = adj_(k, j) * det_new;
          t.sub_mul(v[k], adj_(i, j));
          adj_(k, j) = exact_div(t, det_);
        }
      }
    }
    a_.set_column(i, std::span<const S>(u.values));
    det_ = std::move(det_new);
  }

  template <class T>
  friend DynAdjState<T> dynadj_init(SquareMatrix<T> a);

 private:
  DynAdjState(SquareMatrix<S> a, SquareMatrix<S> adj, S det)
      : a_(std::move(a)), adj_(std::move(adj)), det_(std::move(det)) {}

  SquareMatrix<S> a_;
  SquareMatrix<S> adj_;
  S det_;
};

/// From-scratch construction; throws SingularMatrix when det(A) == 0.
template <class S>
DynAdjState<S> dynadj_init(SquareMatrix<S> a) {
  if (a.dim() == 0) throw DimensionMismatch("dynadj_init on empty matrix");
  auto [adj, det] = adjoint(a);
  if (det.is_zero()) throw SingularMatrix("dynadj_init on singular matrix");
  return DynAdjState<S>(std::move(a), std::move(adj), std::move(det));
}

/// Determinant after the replacement, without committing: row i of the
/// adjugate dotted with the new column. 2d-1 ring ops.
template <class S>
S dynadj_peek_det(const DynAdjState<S>& s, const ColumnUpdate<S>& u) {
  if (u.col < 0 || u.col >= s.dim()) throw DimensionMismatch("update column out of range");
  return row_times_vec(s.adjugate(), u.col, std::span<const S>(u.values));
}

/// Value-semantics update: the input state is never modified.
template <class S>
DynAdjState<S> dynadj_update(const DynAdjState<S>& s, const ColumnUpdate<S>& u) {
  DynAdjState<S> next = s;
  next.apply(u);
  return next;
}

/// Maintains (A, A^{-1}, det(A)) under column replacements; field scalars
/// only. Same contract as DynAdjState with invariant A * inv = I.
template <class S>
class DynInvState {
  static_assert(scalar_traits<S>::is_field, "inverse maintenance needs a field scalar");

 public:
  const SquareMatrix<S>& matrix() const { return a_; }
  const SquareMatrix<S>& inverse() const { return inv_; }
  const S& det() const { return det_; }
  int dim() const { return a_.dim(); }

  std::size_t bytes_estimate() const {
    return a_.bytes_estimate() + inv_.bytes_estimate() + det_.bytes_estimate();
  }

  /// Sherman-Morrison rank-one correction, specialised to a column swap.
  /// Cost: d^2 + 1 multiplications, d^2 - d fused corrections, 2d - 1
  /// divisions. Validates first; state untouched on SingularUpdate.
  void apply(const ColumnUpdate<S>& u) {
    const int n = a_.dim();
    if (u.col < 0 || u.col >= n) throw DimensionMismatch("update column out of range");
    if (static_cast<int>(u.values.size()) != n) throw DimensionMismatch("update length != dim");
    const int i = u.col;
    std::vector<S> v = mat_vec(inv_, std::span<const S>(u.values));
    S growth = std::move(v[i]);  // = det(A') / det(A)
    if (growth.is_zero()) throw SingularUpdate("column replacement makes the matrix singular");
    // inv'[k][.] = inv[k][.] - (v[k]/growth) * inv[i][.]   (k != i)
    // inv'[i][.] = inv[i][.] / growth
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      S f = v[k] / growth;
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) inv_(k, j).sub_mul(f, inv_(i, j));
    }
    for (int j = 0; j < n; ++j) inv_(i, j) /= growth;
    a_.set_column(i, std::span<const S>(u.values));
    det_ *= growth;
  }

  template <class T>
  friend DynInvState<T> dyninv_init(SquareMatrix<T> a);

 private:
  DynInvState(SquareMatrix<S> a, SquareMatrix<S> inv, S det)
      : a_(std::move(a)), inv_(std::move(inv)), det_(std::move(det)) {}

  SquareMatrix<S> a_;
  SquareMatrix<S> inv_;
  S det_;
};

/// From-scratch construction; throws SingularMatrix when det(A) == 0.
template <class S>
DynInvState<S> dyninv_init(SquareMatrix<S> a) {
  if (a.dim() == 0) throw DimensionMismatch("dyninv_init on empty matrix");
  auto [inv, det] = inverse(a);
  return DynInvState<S>(std::move(a), std::move(inv), std::move(det));
}

/// Determinant after the replacement without committing:
/// (row i of A^{-1} . u) * det(A). 2d ops.
template <class S>
S dyninv_peek_det(const DynInvState<S>& s, const ColumnUpdate<S>& u) {
  if (u.col < 0 || u.col >= s.dim()) throw DimensionMismatch("update column out of range");
  S growth = row_times_vec(s.inverse(), u.col, std::span<const S>(u.values));
  return growth * s.det();
}

/// Value-semantics update: the input state is never modified.
template <class S>
DynInvState<S> dyninv_update(const DynInvState<S>& s, const ColumnUpdate<S>& u) {
  DynInvState<S> next = s;
  next.apply(u);
  return next;
}

}  // namespace dynhull
