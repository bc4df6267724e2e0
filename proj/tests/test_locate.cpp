#include <future>
#include <vector>

#include "doctest.h"
#include "dynhull/generators.hpp"
#include "dynhull/hull.hpp"
#include "oracles.hpp"

using namespace dynhull;

namespace {

// Closure containment from first principles: q is in cell c iff replacing
// any one column of c's lifted matrix by q's lift never flips the sign.
bool oracle_contains(const PointSet<ExactInt>& ps, const Cell<ExactInt>& c,
                     const std::vector<ExactInt>& q) {
  const std::size_t k = c.colmap.size();
  std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
  auto fill_col = [&](std::size_t col, const std::vector<ExactInt>& p) {
    for (std::size_t r = 0; r + 1 < k; ++r) m[r][col] = p[r].raw();
    m[k - 1][col] = 1;
  };
  for (std::size_t col = 0; col < k; ++col) fill_col(col, ps[c.colmap[col]]);
  const int cell_sign = sgn(oracle::perm_det(m));
  if (cell_sign == 0) return false;
  for (std::size_t col = 0; col < k; ++col) {
    fill_col(col, q);
    const int s = sgn(oracle::perm_det(m));
    fill_col(col, ps[c.colmap[col]]);
    if (s != 0 && s != cell_sign) return false;
  }
  return true;
}

bool oracle_inside(const Triangulation<ExactInt>& tri, const std::vector<ExactInt>& q) {
  for (const auto& c : tri.cells())
    if (oracle_contains(tri.points(), c, q)) return true;
  return false;
}

}  // namespace

TEST_SUITE("locate") {

TEST_CASE("walk answers match exhaustive containment") {
  PointSet<ExactInt> ps = gen_points_int(26, 3, Distribution::Sphere, 404);
  HullConfig cfg;
  cfg.predicate_mode = PredicateMode::Hashed;
  auto tri = convex_hull(ps, cfg);

  DetRng rng(9);
  int inside_seen = 0, outside_seen = 0;
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<ExactInt> q{ExactInt(rng.int_in(-120, 120)), ExactInt(rng.int_in(-120, 120)),
                            ExactInt(rng.int_in(-120, 120))};
    const CellId got = tri.locate(std::span<const ExactInt>(q));
    if (got == kOutsideCell) {
      CHECK(!oracle_inside(tri, q));
      ++outside_seen;
    } else {
      CHECK(oracle_contains(tri.points(), tri.cells()[static_cast<std::size_t>(got)], q));
      ++inside_seen;
    }

    const CellId scratch = tri.locate_scratch(std::span<const ExactInt>(q));
    CHECK((scratch == kOutsideCell) == (got == kOutsideCell));
    if (scratch != kOutsideCell)
      CHECK(oracle_contains(tri.points(), tri.cells()[static_cast<std::size_t>(scratch)], q));
  }
  CHECK(inside_seen > 0);
  CHECK(outside_seen > 0);
}

TEST_CASE("input vertices are contained") {
  PointSet<ExactInt> ps = gen_points_int(15, 2, Distribution::Ball, 405);
  HullConfig cfg;
  cfg.predicate_mode = PredicateMode::Hashed;
  auto tri = convex_hull(ps, cfg);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const CellId got = tri.locate(std::span<const ExactInt>(ps[i]));
    REQUIRE(got != kOutsideCell);
    CHECK(oracle_contains(tri.points(), tri.cells()[static_cast<std::size_t>(got)], ps[i]));
  }
}

TEST_CASE("hints change the walk, never the answer") {
  PointSet<ExactInt> ps = gen_points_int(22, 3, Distribution::Ball, 406);
  HullConfig cfg;
  cfg.predicate_mode = PredicateMode::Hashed;
  auto tri = convex_hull(ps, cfg);
  std::vector<ExactInt> q{ExactInt(3), ExactInt(-2), ExactInt(5)};
  const CellId base = tri.locate(std::span<const ExactInt>(q), 0);
  for (CellId hint = 0; hint < static_cast<CellId>(tri.cells().size()); ++hint) {
    const CellId got = tri.locate(std::span<const ExactInt>(q), hint);
    if (base == kOutsideCell) {
      CHECK(got == kOutsideCell);
    } else {
      REQUIRE(got != kOutsideCell);
      CHECK(oracle_contains(tri.points(), tri.cells()[static_cast<std::size_t>(got)], q));
    }
  }
  // Out-of-range hints are clamped, not trusted.
  CHECK(tri.locate(std::span<const ExactInt>(q), 100000) ==
        tri.locate(std::span<const ExactInt>(q), 0));
}

TEST_CASE("scratch determinant flavors agree") {
  PointSet<ExactInt> ps = gen_points_int(20, 4, Distribution::Cube, 407);
  HullConfig cfg;
  cfg.predicate_mode = PredicateMode::Laplace;  // no cached states at all
  auto tri = convex_hull(ps, cfg);
  DetRng rng(10);
  for (int rep = 0; rep < 12; ++rep) {
    std::vector<ExactInt> q;
    for (int i = 0; i < 4; ++i) q.push_back(ExactInt(rng.int_in(-110, 110)));
    const CellId a = tri.locate_scratch(std::span<const ExactInt>(q), StaticDetKind::Laplace);
    const CellId b = tri.locate_scratch(std::span<const ExactInt>(q), StaticDetKind::Bird);
    const CellId c = tri.locate_scratch(std::span<const ExactInt>(q), StaticDetKind::Auto);
    CHECK(a == b);
    CHECK(b == c);
  }
  std::vector<ExactInt> q{ExactInt(0), ExactInt(0), ExactInt(0), ExactInt(0)};
  CHECK_THROWS_AS(tri.locate(std::span<const ExactInt>(q)), CacheMiss);
}

TEST_CASE("queries validate their dimension") {
  PointSet<ExactInt> ps = gen_points_int(8, 2, Distribution::Cube, 408);
  HullConfig cfg;
  cfg.predicate_mode = PredicateMode::Hashed;
  auto tri = convex_hull(ps, cfg);
  std::vector<ExactInt> bad{ExactInt(1)};
  CHECK_THROWS_AS(tri.locate(std::span<const ExactInt>(bad)), DimensionMismatch);
  CHECK_THROWS_AS(tri.locate_scratch(std::span<const ExactInt>(bad)), DimensionMismatch);
}

TEST_CASE("concurrent queries on a shared triangulation") {
  PointSet<ExactInt> ps = gen_points_int(24, 3, Distribution::Sphere, 409);
  HullConfig cfg;
  cfg.predicate_mode = PredicateMode::Hashed;
  const auto tri = convex_hull(ps, cfg);

  auto batch = [&tri](std::uint64_t seed) {
    DetRng rng(seed);
    std::vector<CellId> res;
    CellId hint = 0;
    for (int i = 0; i < 80; ++i) {
      std::vector<ExactInt> q{ExactInt(rng.int_in(-110, 110)), ExactInt(rng.int_in(-110, 110)),
                              ExactInt(rng.int_in(-110, 110))};
      CellId r = tri.locate(std::span<const ExactInt>(q), hint);
      if (r != kOutsideCell) hint = r;
      res.push_back(r);
    }
    return res;
  };

  std::vector<std::future<std::vector<CellId>>> jobs;
  for (std::uint64_t s = 1; s <= 4; ++s)
    jobs.push_back(std::async(std::launch::async, batch, s));
  std::vector<std::vector<CellId>> parallel;
  for (auto& j : jobs) parallel.push_back(j.get());
  for (std::uint64_t s = 1; s <= 4; ++s) CHECK(parallel[s - 1] == batch(s));
}

}  // TEST_SUITE
