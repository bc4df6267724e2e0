#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynhull/determinants.hpp"
#include "dynhull/dyndet.hpp"
#include "dynhull/errors.hpp"
#include "dynhull/geometry.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

/// How orientation predicates are answered during construction and walks.
/// Auto picks Hashed above threshold_dim, Laplace at or below it.
enum class PredicateMode { Auto, Hashed, Laplace };

/// Which dynamic state hashed cells carry. Inverse requires field scalars.
enum class KernelKind { Adjoint, Inverse };

/// Lexicographic is the classic beneath-and-beyond ordering. InputOrder
/// inserts points as given, locating each one first and skipping points
/// inside the current hull.
enum class InsertionOrder { Lexicographic, InputOrder };

/// What a zero visibility determinant during insertion means. Fail treats
/// it as a general-position violation and raises DegenerateInput.
/// NotVisible treats the facet as not beyond the new point and moves on;
/// volumes and insertions stay exact, but boundary facets lying in a
/// common hyperplane may then overlap, so walks and vertex extraction are
/// only guaranteed for inputs whose flat subsets sit on supporting
/// hyperplanes (cube corners, points on hull edges).
enum class ZeroPredicate { Fail, NotVisible };

struct HullConfig {
  PredicateMode predicate_mode = PredicateMode::Auto;
  int threshold_dim = 6;
  KernelKind kernel = KernelKind::Adjoint;
  InsertionOrder order = InsertionOrder::Lexicographic;
  ZeroPredicate on_zero = ZeroPredicate::Fail;
};

using CellId = std::int32_t;
inline constexpr CellId kOutsideCell = -1;

/// Static determinant choice for from-scratch walk predicates.
enum class StaticDetKind { Auto, Laplace, Bird };

/// One boundary (d-1)-face: the d ridge vertices, the unique incident
/// cell, and that cell's vertex not on the ridge.
struct Facet {
  std::vector<VertexId> ridge;  // sorted
  CellId cell = 0;
  VertexId opposite = 0;
};

/// A d-simplex of the triangulation. colmap records which point each
/// column of the orientation matrix holds; det is the determinant of that
/// matrix. Cells are never removed, so the vector of cells tiles the hull.
template <class S>
struct Cell {
  std::vector<VertexId> vertices;  // sorted, d+1 ids
  std::vector<VertexId> colmap;    // column j holds the lift of point colmap[j]
  S det;
  std::vector<CellId> neighbor;  // across the facet opposite colmap[j]; kOutsideCell on the boundary
  std::optional<DynAdjState<S>> adj;
  std::optional<DynInvState<ExactRat>> inv;

  int col_of(VertexId v) const {
    for (int j = 0; j < static_cast<int>(colmap.size()); ++j)
      if (colmap[j] == v) return j;
    throw DimensionMismatch("vertex not in cell");
  }

  std::size_t bytes_estimate() const {
    std::size_t b = (vertices.size() + colmap.size()) * sizeof(VertexId) +
                    neighbor.size() * sizeof(CellId) + det.bytes_estimate();
    if (adj) b += adj->bytes_estimate();
    if (inv) b += inv->bytes_estimate();
    return b;
  }
};

struct HullStats {
  std::uint64_t t_cells = 0;
  std::uint64_t n_facets = 0;        // current boundary size
  std::uint64_t cache_entries = 0;   // keys in the ridge hash table
  std::uint64_t cache_bytes_estimate = 0;
};

namespace detail {

struct RidgeHash {
  std::size_t operator()(const std::vector<VertexId>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class S>
class HullBuilder;

}  // namespace detail

using BoundaryMap = std::unordered_map<std::vector<VertexId>, Facet, detail::RidgeHash>;

/// Triangulation of the convex hull produced by incremental insertion.
/// Cells only accumulate; the boundary map doubles as the predicate cache
/// (ridge -> incident cell whose stored state answers in O(d)).
template <class S>
class Triangulation {
 public:
  using Scalar = S;

  Triangulation() = default;

  const PointSet<S>& points() const { return pts_; }
  int dim() const { return pts_.dim; }
  const std::vector<Cell<S>>& cells() const { return cells_; }
  const BoundaryMap& boundary() const { return boundary_; }
  bool has_states() const { return has_states_; }

  /// Ids of the hull vertices, ascending. Under general position these are
  /// exactly the vertices appearing on boundary ridges.
  std::vector<VertexId> hull_vertices() const {
    std::vector<VertexId> ids;
    for (const auto& [ridge, f] : boundary_) ids.insert(ids.end(), ridge.begin(), ridge.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  /// Exact volume: sum of |det|/d! over all cells.
  ExactRat volume() const {
    S num;
    for (const auto& c : cells_) {
      if (c.det.sign() < 0) {
        num -= c.det;
      } else {
        num += c.det;
      }
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(pts_.dim));
    ExactInt fact{std::move(f)};
    if constexpr (scalar_traits<S>::is_field) {
      return num / ExactRat(fact);
    } else {
      return ExactRat(num, fact);
    }
  }

  HullStats stats() const {
    HullStats st;
    st.t_cells = cells_.size();
    st.n_facets = boundary_.size();
    st.cache_entries = boundary_.size();
    std::size_t bytes = 0;
    for (const auto& [ridge, f] : boundary_)
      bytes += ridge.size() * sizeof(VertexId) + sizeof(Facet) + f.ridge.size() * sizeof(VertexId);
    for (const auto& c : cells_) bytes += c.bytes_estimate();
    st.cache_bytes_estimate = bytes;
    return st;
  }

  /// Orientation of ridge + {a} answered from the cache in O(d): the
  /// returned determinant is the incident cell's orientation matrix with
  /// the opposite vertex's column replaced by a. Throws CacheMiss when the
  /// ridge is not on the boundary or the hull was built without states.
  std::pair<int, S> cached_orientation(std::span<const VertexId> ridge,
                                       std::span<const S> coords) const {
    if (!has_states_) throw CacheMiss("triangulation was built without cached states");
    if (static_cast<int>(coords.size()) != pts_.dim)
      throw DimensionMismatch("query point dimension mismatch");
    std::vector<VertexId> key(ridge.begin(), ridge.end());
    std::sort(key.begin(), key.end());
    auto it = boundary_.find(key);
    if (it == boundary_.end()) throw CacheMiss("ridge is not on the current boundary");
    const Facet& f = it->second;
    const Cell<S>& c = cells_[f.cell];
    std::vector<S> lifted = lift_point(coords);
    S det = peek_replace(c, c.col_of(f.opposite), lifted);
    return {det.sign(), std::move(det)};
  }

  std::pair<int, S> cached_orientation(std::span<const VertexId> ridge, VertexId a) const {
    const auto& p = pts_[a];
    return cached_orientation(ridge, std::span<const S>(p.data(), p.size()));
  }

  /// Visibility walk from `hint` (last located cell works well). Returns
  /// the id of a cell whose closure contains q, or kOutsideCell. Boundary
  /// points land in an incident cell. Predicates are answered from the
  /// cached states, never from scratch; after 10 * t steps the walk falls
  /// back to an exhaustive cached scan.
  CellId locate(std::span<const S> q, CellId hint = 0) const {
    if (!has_states_) throw CacheMiss("locate needs cached states; build with hashed predicates");
    if (static_cast<int>(q.size()) != pts_.dim)
      throw DimensionMismatch("query point dimension mismatch");
    std::vector<S> lifted = lift_point(q);
    return walk(lifted, hint,
                [this](const Cell<S>& c, int j, const std::vector<S>& l) {
                  return peek_replace(c, j, l);
                });
  }

  /// Same walk with from-scratch determinants; works for any build mode.
  CellId locate_scratch(std::span<const S> q, StaticDetKind kind = StaticDetKind::Auto,
                        CellId hint = 0) const {
    if (static_cast<int>(q.size()) != pts_.dim)
      throw DimensionMismatch("query point dimension mismatch");
    std::vector<S> lifted = lift_point(q);
    return walk(lifted, hint,
                [this, kind](const Cell<S>& c, int j, const std::vector<S>& l) {
                  return scratch_replace(c, j, l, kind);
                });
  }

 private:
  friend class detail::HullBuilder<S>;

  /// det of c's orientation matrix with column j replaced by `lifted`,
  /// answered from the cell's dynamic state in O(d).
  S peek_replace(const Cell<S>& c, int j, const std::vector<S>& lifted) const {
    if (c.adj) return row_times_vec(c.adj->adjugate(), j, std::span<const S>(lifted));
    if constexpr (scalar_traits<S>::is_field) {
      if (c.inv)
        return row_times_vec(c.inv->inverse(), j, std::span<const S>(lifted)) * c.inv->det();
    }
    throw CacheMiss("cell carries no dynamic state");
  }

  /// Same determinant from scratch (O(d^2) rebuild + static determinant).
  S scratch_replace(const Cell<S>& c, int j, const std::vector<S>& lifted,
                    StaticDetKind kind) const {
    const int n = pts_.dim + 1;
    SquareMatrix<S> m(n);
    for (int col = 0; col < n; ++col) {
      if (col == j) {
        for (int r = 0; r < n; ++r) m(r, col) = lifted[r];
      } else {
        const auto& p = pts_[c.colmap[col]];
        for (int r = 0; r < n - 1; ++r) m(r, col) = p[r];
        m(n - 1, col) = S(1);
      }
    }
    switch (kind) {
      case StaticDetKind::Laplace:
        return det_laplace(m);
      case StaticDetKind::Bird:
        return det_bird(m);
      case StaticDetKind::Auto:
      default:
        return n <= 7 ? det_laplace(m) : det_bird(m);
    }
  }

  template <class Pred>
  CellId walk(const std::vector<S>& lifted, CellId hint, Pred&& pred) const {
    if (cells_.empty()) return kOutsideCell;
    CellId cur = (hint >= 0 && hint < static_cast<CellId>(cells_.size())) ? hint : 0;
    const std::uint64_t budget = 10 * static_cast<std::uint64_t>(cells_.size());
    std::uint64_t steps = 0;
    while (true) {
      const Cell<S>& c = cells_[cur];
      int flip = -1;
      for (int j = 0; j < static_cast<int>(c.colmap.size()); ++j) {
        if (pred(c, j, lifted).sign() * c.det.sign() < 0) {
          flip = j;
          break;
        }
      }
      if (flip < 0) return cur;  // on the inner (or incident) side of every facet
      CellId nb = c.neighbor[flip];
      if (nb == kOutsideCell) return kOutsideCell;  // beyond a supporting hyperplane
      cur = nb;
      if (++steps > budget) break;
    }
    // The deterministic first-flip walk can cycle; certify by scanning.
    for (CellId cid = 0; cid < static_cast<CellId>(cells_.size()); ++cid) {
      const Cell<S>& c = cells_[cid];
      bool inside = true;
      for (int j = 0; j < static_cast<int>(c.colmap.size()) && inside; ++j) {
        if (pred(c, j, lifted).sign() * c.det.sign() < 0) inside = false;
      }
      if (inside) return cid;
    }
    return kOutsideCell;
  }

  PointSet<S> pts_;
  std::vector<Cell<S>> cells_;
  BoundaryMap boundary_;
  bool has_states_ = false;
};

/// Incremental convex hull of `points`. Requires at least d+1 points in
/// general position; throws DegenerateInput the moment an orientation
/// predicate hits zero and TooFewPoints/DimensionMismatch on malformed
/// input. The result owns the point set.
template <class S>
Triangulation<S> convex_hull(PointSet<S> points, HullConfig cfg = {});

}  // namespace dynhull

#include "dynhull/hull_impl.hpp"
