#pragma once

#include <utility>
#include <vector>

#include "dynhull/errors.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

/// The from-scratch determinant algorithms compared by the benchmarks.
/// Laplace and Bird accept ring scalars; LU requires a field.
enum class DetAlgorithm { Laplace, Bird, LU };

/// Cofactor expansion, always along the first column (no sparsity
/// heuristics, so op counts depend only on the dimension). Exponential;
/// the right tool only for small dimensions.
template <class S>
S det_laplace(const SquareMatrix<S>& a) {
  const int n = a.dim();
  if (n == 0) throw DimensionMismatch("determinant of empty matrix");
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1);
  SquareMatrix<S> minor(n - 1);
  auto fill_minor = [&](int skip_row) {
    for (int c = 1; c < n; ++c) {
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == skip_row) continue;
        minor(rr++, c - 1) = a(r, c);
      }
    }
  };
  fill_minor(0);
  S acc = a(0, 0) * det_laplace(minor);
  for (int r = 1; r < n; ++r) {
    fill_minor(r);
    S term = a(r, 0) * det_laplace(minor);
    if (r % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// Division-free determinant: n-1 rounds of X <- mu(X) * A, where mu
/// clears the strict lower triangle and replaces the diagonal with negated
/// suffix sums of X's diagonal. det(A) = (-1)^(n-1) * X[0][0]. No pivoting,
/// no divisions: valid over any commutative ring.
template <class S>
S det_bird(const SquareMatrix<S>& a) {
  const int n = a.dim();
  if (n == 0) throw DimensionMismatch("determinant of empty matrix");
  if (n == 1) return a(0, 0);
  SquareMatrix<S> x = a;
  std::vector<S> diag(static_cast<std::size_t>(n));
  for (int iter = 0; iter < n - 1; ++iter) {
    S suffix;
    diag[n - 1] = S(0);
    for (int i = n - 2; i >= 0; --i) {
      suffix += x(i + 1, i + 1);
      diag[i] = -suffix;
    }
    SquareMatrix<S> z(n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        S acc;
        acc.add_mul(diag[i], a(i, j));
        for (int k = i + 1; k < n; ++k) acc.add_mul(x(i, k), a(k, j));
        z(i, j) = std::move(acc);
      }
    }
    x = std::move(z);
  }
  if ((n - 1) % 2 == 1) return -x(0, 0);
  return x(0, 0);
}

/// Gaussian elimination with first-nonzero pivoting; field scalars only.
/// Returns 0 when no pivot is available.
template <class S>
S det_lu(const SquareMatrix<S>& a) {
  static_assert(scalar_traits<S>::is_field, "det_lu divides freely; use a field scalar");
  const int n = a.dim();
  if (n == 0) throw DimensionMismatch("determinant of empty matrix");
  SquareMatrix<S> m = a;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return S(0);
    if (p != k) {
      for (int c = k; c < n; ++c) std::swap(m(p, c), m(k, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      S f = m(r, k) / m(k, k);
      for (int c = k + 1; c < n; ++c) m(r, c).sub_mul(f, m(k, c));
      m(r, k) = S(0);
    }
  }
  S det(sign);
  for (int k = 0; k < n; ++k) det *= m(k, k);
  return det;
}

/// Fraction-free elimination (Sylvester-style two-step divisions, all
/// exact over the ring). O(n^3) ring ops; intermediate entries are minors
/// of A, so bit growth stays linear in n. First-nonzero pivoting.
template <class S>
S det_bareiss(const SquareMatrix<S>& a) {
  const int n = a.dim();
  if (n == 0) throw DimensionMismatch("determinant of empty matrix");
  if (n == 1) return a(0, 0);
  SquareMatrix<S> m = a;
  S prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return S(0);
    if (p != k) {
      for (int c = k; c < n; ++c) std::swap(m(p, c), m(k, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        S t = m(k, k) * m(r, c);
        t.sub_mul(m(r, k), m(k, c));
        m(r, c) = exact_div(t, prev);
      }
      m(r, k) = S(0);
    }
    prev = m(k, k);
  }
  if (sign < 0) return -m(n - 1, n - 1);
  return m(n - 1, n - 1);
}

namespace detail {

/// Internal general-purpose exact determinant: cofactor expansion while it
/// beats elimination, fraction-free elimination beyond.
template <class S>
S det_static(const SquareMatrix<S>& a) {
  return a.dim() <= 4 ? det_laplace(a) : det_bareiss(a);
}

/// Gauss-Jordan with first-nonzero pivoting. Returns (inverse, det);
/// det == 0 signals singular and the first component is then empty.
template <class S>
std::pair<SquareMatrix<S>, S> gauss_jordan(const SquareMatrix<S>& a) {
  static_assert(scalar_traits<S>::is_field);
  const int n = a.dim();
  SquareMatrix<S> m = a;
  SquareMatrix<S> inv = SquareMatrix<S>::identity(n);
  S det(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return {SquareMatrix<S>(), S(0)};
    if (p != k) {
      for (int c = 0; c < n; ++c) {
        std::swap(m(p, c), m(k, c));
        std::swap(inv(p, c), inv(k, c));
      }
      det = -det;
    }
    det *= m(k, k);
    S pivinv = S(1) / m(k, k);
    for (int c = 0; c < n; ++c) {
      m(k, c) *= pivinv;
      inv(k, c) *= pivinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || m(r, k).is_zero()) continue;
      S f = m(r, k);
      for (int c = 0; c < n; ++c) {
        m(r, c).sub_mul(f, m(k, c));
        inv(r, c).sub_mul(f, inv(k, c));
      }
    }
  }
  return {std::move(inv), std::move(det)};
}

}  // namespace detail

/// Adjugate and determinant in one call. Defined for every input,
/// including singular matrices: A * adj(A) = det(A) * I always holds.
template <class S>
std::pair<SquareMatrix<S>, S> adjoint(const SquareMatrix<S>& a) {
  const int n = a.dim();
  if (n == 0) throw DimensionMismatch("adjoint of empty matrix");
  if (n == 1) {
    SquareMatrix<S> adj(1);
    adj(0, 0) = S(1);
    return {std::move(adj), a(0, 0)};
  }
  if constexpr (scalar_traits<S>::is_field) {
    auto [inv, det] = detail::gauss_jordan(a);
    if (!det.is_zero()) {
      SquareMatrix<S> adj(n);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) adj(r, c) = inv(r, c) * det;
      return {std::move(adj), std::move(det)};
    }
    // singular: fall through to cofactors
  }
  SquareMatrix<S> adj(n);
  SquareMatrix<S> minor(n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      S cof = detail::det_static(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = std::move(cof);  // adjugate is the transposed cofactor matrix
    }
  }
  S det;
  for (int i = 0; i < n; ++i) det.add_mul(a(i, 0), adj(0, i));
  return {std::move(adj), std::move(det)};
}

/// Inverse and determinant; throws SingularMatrix when det == 0.
template <class S>
std::pair<SquareMatrix<S>, S> inverse(const SquareMatrix<S>& a) {
  static_assert(scalar_traits<S>::is_field, "inverse needs a field scalar");
  if (a.dim() == 0) throw DimensionMismatch("inverse of empty matrix");
  auto [inv, det] = detail::gauss_jordan(a);
  if (det.is_zero()) throw SingularMatrix("inverse of singular matrix");
  return {std::move(inv), std::move(det)};
}

}  // namespace dynhull
