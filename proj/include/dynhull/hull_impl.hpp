#pragma once

// Implementation of the incremental hull builder; included by hull.hpp.

#include <algorithm>
#include <numeric>
#include <string>

namespace dynhull {
namespace detail {

template <class S>
class HullBuilder {
 public:
  HullBuilder(PointSet<S> pts, HullConfig cfg) : cfg_(cfg) {
    t_.pts_ = std::move(pts);
    d_ = t_.pts_.dim;
  }

  Triangulation<S> run() {
    validate();
    order_points();
    init_simplex();
    CellId hint = 0;
    for (std::size_t k = static_cast<std::size_t>(d_) + 1; k < order_.size(); ++k) {
      const VertexId a = order_[k];
      std::vector<S> lifted = t_.pts_.lifted(a);
      if (cfg_.order == InsertionOrder::InputOrder) {
        // Locate-first variant: points inside the hull so far can never
        // become hull vertices and are skipped outright.
        CellId at = locate_partial(lifted, hint);
        if (at != kOutsideCell) {
          hint = at;
          continue;
        }
      }
      insert(a, lifted);
    }
    return std::move(t_);
  }

 private:
  void validate() {
    if (d_ < 1) throw DimensionMismatch("hull needs dimension >= 1");
    if (t_.pts_.size() < static_cast<std::size_t>(d_) + 1)
      throw TooFewPoints("need at least d+1 points, got " + std::to_string(t_.pts_.size()));
    if (hashed() && cfg_.kernel == KernelKind::Inverse && !scalar_traits<S>::is_field)
      throw DimensionMismatch("inverse kernel needs field scalars");
  }

  bool hashed() const {
    switch (cfg_.predicate_mode) {
      case PredicateMode::Hashed:
        return true;
      case PredicateMode::Laplace:
        return false;
      case PredicateMode::Auto:
      default:
        return d_ > cfg_.threshold_dim;
    }
  }

  void order_points() {
    order_.resize(t_.pts_.size());
    std::iota(order_.begin(), order_.end(), VertexId{0});
    if (cfg_.order == InsertionOrder::Lexicographic) {
      std::sort(order_.begin(), order_.end(), [this](VertexId x, VertexId y) {
        return t_.pts_[x] < t_.pts_[y];
      });
    }
  }

  void init_simplex() {
    const int n = d_ + 1;
    Cell<S> c;
    c.colmap.assign(order_.begin(), order_.begin() + n);
    c.vertices = c.colmap;
    std::sort(c.vertices.begin(), c.vertices.end());
    SquareMatrix<S> m = orientation_matrix(t_.pts_, std::span<const VertexId>(c.colmap));
    if (hashed()) {
      t_.has_states_ = true;
      if (cfg_.kernel == KernelKind::Adjoint) {
        auto st = make_adj_state(std::move(m));
        c.det = st.det();
        c.adj = std::move(st);
      } else {
        if constexpr (scalar_traits<S>::is_field) {
          auto st = make_inv_state(std::move(m));
          c.det = st.det();
          c.inv = std::move(st);
        }
      }
    } else {
      c.det = det_static(m);
      if (c.det.is_zero()) throw DegenerateInput("first d+1 points are affinely dependent");
    }
    c.neighbor.assign(static_cast<std::size_t>(n), kOutsideCell);
    t_.cells_.push_back(std::move(c));
    register_facets(0);
  }

  DynAdjState<S> make_adj_state(SquareMatrix<S> m) {
    try {
      return dynadj_init(std::move(m));
    } catch (const SingularMatrix&) {
      throw DegenerateInput("first d+1 points are affinely dependent");
    }
  }

  DynInvState<S> make_inv_state(SquareMatrix<S> m) {
    try {
      return dyninv_init(std::move(m));
    } catch (const SingularMatrix&) {
      throw DegenerateInput("first d+1 points are affinely dependent");
    }
  }

  /// det of cell f.cell's matrix with the column of f.opposite replaced by
  /// the lifted query point.
  S facet_det(const Facet& f, const std::vector<S>& lifted) const {
    const Cell<S>& c = t_.cells_[f.cell];
    const int j = c.col_of(f.opposite);
    if (hashed()) return t_.peek_replace(c, j, lifted);
    return t_.scratch_replace(c, j, lifted, StaticDetKind::Laplace);
  }

  CellId locate_partial(const std::vector<S>& lifted, CellId hint) const {
    if (hashed()) {
      return t_.walk(lifted, hint, [this](const Cell<S>& c, int j, const std::vector<S>& l) {
        return t_.peek_replace(c, j, l);
      });
    }
    return t_.walk(lifted, hint, [this](const Cell<S>& c, int j, const std::vector<S>& l) {
      return t_.scratch_replace(c, j, l, StaticDetKind::Laplace);
    });
  }

  void insert(VertexId a, const std::vector<S>& lifted) {
    // Deterministic sweep over the boundary facets as they stood before
    // this insertion (new cells register their own facets as they appear).
    std::vector<Facet> snapshot;
    snapshot.reserve(t_.boundary_.size());
    for (const auto& [ridge, f] : t_.boundary_) snapshot.push_back(f);
    std::sort(snapshot.begin(), snapshot.end(),
              [](const Facet& x, const Facet& y) { return x.ridge < y.ridge; });
    std::vector<CellId> created;
    for (const Facet& f : snapshot) {
      S dnew = facet_det(f, lifted);
      if (dnew.is_zero()) {
        if (cfg_.on_zero == ZeroPredicate::Fail) {
          throw DegenerateInput("point " + std::to_string(a) +
                                " lies on the hyperplane of a boundary facet");
        }
        continue;  // on the hyperplane: not beyond this facet
      }
      if (dnew.sign() * t_.cells_[f.cell].det.sign() < 0) {
        created.push_back(make_cell(f, a, std::move(dnew), lifted));
      }
    }
    if (created.empty()) {
      // Lexicographic insertion keeps every new point outside the hull so
      // far, so this means a duplicate or an interior point: either way
      // the ordering contract is broken.
      throw DegenerateInput("point " + std::to_string(a) + " is not outside the current hull");
    }
    for (CellId cid : created) register_facets(cid);
  }

  CellId make_cell(const Facet& f, VertexId a, S dnew, const std::vector<S>& lifted) {
    Cell<S> nc;
    {
      // Reference dies before push_back reallocates the cell vector.
      const Cell<S>& parent = t_.cells_[f.cell];
      const int j = parent.col_of(f.opposite);
      nc.colmap = parent.colmap;
      nc.colmap[j] = a;
      nc.vertices = nc.colmap;
      std::sort(nc.vertices.begin(), nc.vertices.end());
      nc.det = std::move(dnew);
      nc.neighbor.assign(static_cast<std::size_t>(d_) + 1, kOutsideCell);
      if (hashed()) {
        ColumnUpdate<S> upd{j, lifted};
        if (parent.adj) {
          nc.adj = dynadj_update(*parent.adj, upd);
        } else if constexpr (scalar_traits<S>::is_field) {
          nc.inv = dyninv_update(*parent.inv, upd);
        }
      }
    }
    t_.cells_.push_back(std::move(nc));
    return static_cast<CellId>(t_.cells_.size() - 1);
  }

  /// Symmetric-difference maintenance of the boundary: a ridge seen once
  /// is boundary; seen twice it became interior, so link the two cells
  /// and drop it.
  void register_facets(CellId cid) {
    Cell<S>& c = t_.cells_[cid];
    const int n = d_ + 1;
    for (int j = 0; j < n; ++j) {
      std::vector<VertexId> ridge;
      ridge.reserve(static_cast<std::size_t>(d_));
      for (int k = 0; k < n; ++k) {
        if (k != j) ridge.push_back(c.colmap[k]);
      }
      std::sort(ridge.begin(), ridge.end());
      auto it = t_.boundary_.find(ridge);
      if (it == t_.boundary_.end()) {
        Facet f{ridge, cid, c.colmap[j]};
        t_.boundary_.emplace(std::move(ridge), std::move(f));
      } else {
        const Facet& other = it->second;
        Cell<S>& oc = t_.cells_[other.cell];
        oc.neighbor[oc.col_of(other.opposite)] = cid;
        c.neighbor[j] = other.cell;
        t_.boundary_.erase(it);
      }
    }
  }

  Triangulation<S> t_;
  HullConfig cfg_;
  int d_ = 0;
  std::vector<VertexId> order_;
};

}  // namespace detail

template <class S>
Triangulation<S> convex_hull(PointSet<S> points, HullConfig cfg) {
  detail::HullBuilder<S> b(std::move(points), cfg);
  return b.run();
}

}  // namespace dynhull
