#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "dynhull/determinants.hpp"
#include "dynhull/errors.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

using VertexId = std::uint32_t;

/// A finite set of points of equal dimension, addressed by insertion index.
template <class S>
struct PointSet {
  int dim = 0;
  std::vector<std::vector<S>> pts;

  PointSet() = default;
  explicit PointSet(int d) : dim(d) {}

  std::size_t size() const { return pts.size(); }

  const std::vector<S>& operator[](std::size_t id) const { return pts[id]; }

  void add(std::vector<S> p) {
    if (static_cast<int>(p.size()) != dim) throw DimensionMismatch("point dimension mismatch");
    pts.push_back(std::move(p));
  }

  /// Homogeneous lift: (x_1 .. x_d, 1).
  std::vector<S> lifted(std::size_t id) const {
    std::vector<S> v = pts[id];
    v.push_back(S(1));
    return v;
  }
};

/// Lift of an arbitrary coordinate vector.
template <class S>
std::vector<S> lift_point(std::span<const S> coords) {
  std::vector<S> v(coords.begin(), coords.end());
  v.push_back(S(1));
  return v;
}

/// (d+1) x (d+1) matrix whose column j is the homogeneous lift of
/// ps[ids[j]]. Requires exactly d+1 ids.
template <class S>
SquareMatrix<S> orientation_matrix(const PointSet<S>& ps, std::span<const VertexId> ids) {
  const int n = ps.dim + 1;
  if (static_cast<int>(ids.size()) != n)
    throw DimensionMismatch("orientation needs d+1 points");
  SquareMatrix<S> m(n);
  for (int j = 0; j < n; ++j) {
    const auto& p = ps[ids[j]];
    for (int i = 0; i < ps.dim; ++i) m(i, j) = p[i];
    m(ps.dim, j) = S(1);
  }
  return m;
}

/// Sign of the orientation determinant of d+1 points: +1 / -1 for the two
/// affine orientations, 0 when the points are affinely dependent. Laplace
/// expansion up to threshold_dim, fraction-free elimination beyond.
template <class S>
int orientation(const PointSet<S>& ps, std::span<const VertexId> ids, int threshold_dim = 6) {
  SquareMatrix<S> m = orientation_matrix(ps, ids);
  return (ps.dim <= threshold_dim ? det_laplace(m) : det_bareiss(m)).sign();
}

/// Orientation of explicit points (d+1 points of dimension d).
template <class S>
int orientation(const std::vector<std::vector<S>>& points, int threshold_dim = 6) {
  if (points.empty()) throw DimensionMismatch("orientation of no points");
  PointSet<S> ps(static_cast<int>(points.size()) - 1);
  for (const auto& p : points) ps.add(p);
  std::vector<VertexId> ids(points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
  return orientation(ps, std::span<const VertexId>(ids), threshold_dim);
}

using AnyPointSet = std::variant<PointSet<ExactInt>, PointSet<ExactRat>>;

/// Text format: header "n d", then n lines of d whitespace-separated
/// coordinates. Integers make an integer set; any coordinate with a '/'
/// or all-integer input forced by the caller stays rational.
AnyPointSet read_pointset(std::istream& in);

template <class S>
PointSet<S> read_pointset_as(std::istream& in);

template <class S>
void write_pointset(std::ostream& out, const PointSet<S>& ps);

}  // namespace dynhull
