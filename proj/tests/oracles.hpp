#pragma once

// Independent reference implementations used only by tests. Deliberately
// naive: permutation-expansion determinants over raw GMP types, an edge-walk
// shoelace area, exhaustive facet scans. Nothing here shares arithmetic with
// the library under test.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Sum of sgn(pi) * prod_i a[i][pi(i)] over all n! permutations.
template <class Num>
Num perm_det(const std::vector<std::vector<Num>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Num(1);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Num det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Num term = 1;
    for (int i = 0; i < n; ++i) term *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[i])];
    if (inversions % 2) {
      det -= term;
    } else {
      det += term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// Lifted orientation of d+1 points of dimension d: rows are (x_1..x_d, 1).
template <class Num>
Num lifted_det(const std::vector<std::vector<Num>>& pts, const std::vector<std::size_t>& ids) {
  const std::size_t k = ids.size();
  std::vector<std::vector<Num>> m(k, std::vector<Num>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c + 1 < k; ++c) m[r][c] = pts[ids[r]][c];
    m[r][k - 1] = 1;
  }
  return perm_det(m);
}

inline int num_sign(const mpz_class& v) { return sgn(v); }
inline int num_sign(const mpq_class& v) { return sgn(v); }

// Exhaustive facet scan: every size-d subset whose affine hull has all the
// remaining points strictly on one side is a facet; hull vertices are the
// points on at least one facet. Assumes general position (no zero signs
// apart from the subset itself).
template <class Num>
std::vector<std::size_t> hull_vertices_by_facet_scan(const std::vector<std::vector<Num>>& pts) {
  const std::size_t n = pts.size();
  const std::size_t d = pts.empty() ? 0 : pts[0].size();
  std::set<std::size_t> verts;
  std::vector<std::size_t> subset(d);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) subset[k++] = i;
    int seen = 0;
    bool facet = true;
    for (std::size_t q = 0; q < n && facet; ++q) {
      if (pick[q]) continue;
      std::vector<std::size_t> ids = subset;
      ids.push_back(q);
      const int s = num_sign(lifted_det(pts, ids));
      if (s == 0) continue;  // q on the affine hull: cannot refute this subset
      if (seen == 0) {
        seen = s;
      } else if (s != seen) {
        facet = false;
      }
    }
    if (facet && seen != 0) verts.insert(subset.begin(), subset.end());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::vector<std::size_t>(verts.begin(), verts.end());
}

// Twice the polygon area for a 2d hull, from the unordered boundary edge
// list: walks the edge cycle, then shoelace.
template <class Num>
Num polygon_area2(const std::vector<std::vector<Num>>& pts,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (edges.size() < 3) return Num(0);
  std::vector<std::vector<std::size_t>> adj(pts.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> cycle;
  std::size_t start = edges[0].first;
  std::size_t prev = start, cur = adj[start][0];
  cycle.push_back(start);
  while (cur != start) {
    cycle.push_back(cur);
    std::size_t next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  Num area2 = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& p = pts[cycle[i]];
    const auto& q = pts[cycle[(i + 1) % cycle.size()]];
    area2 += p[0] * q[1] - p[1] * q[0];
  }
  return area2 < 0 ? Num(-area2) : area2;
}

}  // namespace oracle
