#include "dynhull/generators.hpp"

#include <cmath>
#include <set>
#include <string>

#include "dynhull/determinants.hpp"

namespace dynhull {

Scenario parse_scenario(std::string_view s) {
  if (s == "a") return Scenario::A;
  if (s == "b") return Scenario::B;
  if (s == "c") return Scenario::C;
  if (s == "d") return Scenario::D;
  throw InvalidScenario("unknown scenario '" + std::string(s) + "' (expected a, b, c or d)");
}

Distribution parse_distribution(std::string_view s) {
  if (s == "cube" || s == "i") return Distribution::Cube;
  if (s == "ball" || s == "ii") return Distribution::Ball;
  if (s == "sphere" || s == "iii") return Distribution::Sphere;
  throw InvalidScenario("unknown distribution '" + std::string(s) +
                        "' (expected cube, ball or sphere)");
}

char scenario_tag(Scenario s) {
  switch (s) {
    case Scenario::A:
      return 'a';
    case Scenario::B:
      return 'b';
    case Scenario::C:
      return 'c';
    case Scenario::D:
    default:
      return 'd';
  }
}

const char* distribution_name(Distribution d) {
  switch (d) {
    case Distribution::Cube:
      return "cube";
    case Distribution::Ball:
      return "ball";
    case Distribution::Sphere:
    default:
      return "sphere";
  }
}

ExactInt gen_int_coeff(Scenario s, DetRng& rng) {
  switch (s) {
    case Scenario::C:
      return ExactInt(rng.signed_bits(10000));
    case Scenario::D:
      return ExactInt(rng.signed_bits(32));
    default:
      throw InvalidScenario("scenarios a and b carry rational coefficients");
  }
}

ExactRat gen_rat_coeff(Scenario s, DetRng& rng) {
  if (s == Scenario::A) {
    mpz_class num, den, g;
    do {
      num = rng.exact_bits(10000);
      den = rng.exact_bits(10000);
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } while (cmp(g, 1) != 0);
    if (rng.next_u64() & 1) num = -num;
    mpq_class q(num);
    q /= mpq_class(den);
    return ExactRat(std::move(q));
  }
  if (s == Scenario::B) {
    // Exact values of uniform random doubles in (-1, 1): m * 2^p with a
    // 53-bit mantissa and an exponent fitting the 11-bit field. Sampling
    // actual doubles (rather than spreading p over its full range) keeps
    // the denominators at realistic sizes; 2^2047 is not a double.
    double x;
    do {
      x = rng.uniform(-1.0, 1.0);
    } while (x == 0.0 || x == -1.0);
    return ExactRat::from_double(x);
  }
  throw InvalidScenario("scenarios c and d carry integer coefficients");
}

namespace {

template <class S, class Coeff>
MatrixChain<S> gen_chain(int d, std::uint64_t seed, std::size_t n_updates, Coeff&& coeff) {
  if (d < 1) throw DimensionMismatch("matrix dimension must be >= 1");
  DetRng rng(seed);
  MatrixChain<S> chain;
  // Non-singular base (redraw wholesale on the vanishingly rare det 0).
  for (;;) {
    SquareMatrix<S> m(d);
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < d; ++r) m(r, c) = coeff(rng);
    if (!det_bareiss(m).is_zero()) {
      chain.base = std::move(m);
      break;
    }
  }
  if (n_updates == 0) return chain;
  // Validate candidates with the adjoint state's cheap peek; the running
  // state keeps every prefix of the chain non-singular.
  DynAdjState<S> state = dynadj_init(chain.base);
  chain.updates.reserve(n_updates);
  while (chain.updates.size() < n_updates) {
    ColumnUpdate<S> upd;
    upd.col = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    upd.values.reserve(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) upd.values.push_back(coeff(rng));
    if (dynadj_peek_det(state, upd).is_zero()) continue;
    state.apply(upd);
    chain.updates.push_back(std::move(upd));
  }
  return chain;
}

}  // namespace

MatrixChain<ExactInt> gen_matrix_int(int d, Scenario s, std::uint64_t seed,
                                     std::size_t n_updates) {
  if (!scenario_is_integer(s)) throw InvalidScenario("integer chain needs scenario c or d");
  return gen_chain<ExactInt>(d, seed, n_updates,
                             [s](DetRng& rng) { return gen_int_coeff(s, rng); });
}

MatrixChain<ExactRat> gen_matrix_rat(int d, Scenario s, std::uint64_t seed,
                                     std::size_t n_updates) {
  if (scenario_is_integer(s)) throw InvalidScenario("rational chain needs scenario a or b");
  return gen_chain<ExactRat>(d, seed, n_updates,
                             [s](DetRng& rng) { return gen_rat_coeff(s, rng); });
}

namespace {

constexpr long kBox = 100;        // the cube/ball/sphere extent
constexpr long kBox2 = kBox * kBox;

template <class S>
struct CoordDrawer;

template <>
struct CoordDrawer<ExactInt> {
  static std::vector<ExactInt> draw(int d, Distribution dist, DetRng& rng) {
    std::vector<long> c(static_cast<std::size_t>(d));
    switch (dist) {
      case Distribution::Cube:
        for (auto& x : c) x = rng.int_in(-kBox, kBox);
        break;
      case Distribution::Ball:
        for (;;) {
          long s2 = 0;
          for (auto& x : c) {
            x = rng.int_in(-kBox, kBox);
            s2 += x * x;
          }
          if (s2 <= kBox2) break;
        }
        break;
      case Distribution::Sphere:
        for (;;) {
          double s2 = 0;
          std::vector<double> g(static_cast<std::size_t>(d));
          for (auto& x : g) {
            x = rng.gauss();
            s2 += x * x;
          }
          if (s2 == 0.0) continue;
          const double r = std::sqrt(s2);
          for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] =
              std::llround(g[static_cast<std::size_t>(i)] / r * static_cast<double>(kBox));
          break;
        }
        break;
    }
    std::vector<ExactInt> out;
    out.reserve(c.size());
    for (long x : c) out.emplace_back(x);
    return out;
  }
};

template <>
struct CoordDrawer<ExactRat> {
  static std::vector<ExactRat> draw(int d, Distribution dist, DetRng& rng) {
    std::vector<double> c(static_cast<std::size_t>(d));
    switch (dist) {
      case Distribution::Cube:
        for (auto& x : c) x = rng.uniform(-kBox, kBox);
        break;
      case Distribution::Ball:
        for (;;) {
          double s2 = 0;
          for (auto& x : c) {
            x = rng.uniform(-kBox, kBox);
            s2 += x * x;
          }
          if (s2 <= static_cast<double>(kBox2)) break;
        }
        break;
      case Distribution::Sphere:
        for (;;) {
          double s2 = 0;
          for (auto& x : c) {
            x = rng.gauss();
            s2 += x * x;
          }
          if (s2 == 0.0) continue;
          const double r = std::sqrt(s2);
          for (auto& x : c) x = x / r * static_cast<double>(kBox);
          break;
        }
        break;
    }
    std::vector<ExactRat> out;
    out.reserve(c.size());
    for (double x : c) out.push_back(ExactRat::from_double(x));
    return out;
  }
};

template <class S>
PointSet<S> gen_pointset(long n, int d, Distribution dist, std::uint64_t seed) {
  if (d < 1) throw DimensionMismatch("point dimension must be >= 1");
  if (n < d + 1)
    throw TooFewPoints("need at least d+1 points, requested " + std::to_string(n));
  DetRng rng(seed);
  PointSet<S> ps(d);
  std::set<std::vector<std::string>> seen;
  long attempts = 0;
  const long attempt_cap = 1000 * n + 1000;
  while (static_cast<long>(ps.size()) < n) {
    if (++attempts > attempt_cap)
      throw Error("distribution cannot supply enough distinct points");
    std::vector<S> p = CoordDrawer<S>::draw(d, dist, rng);
    std::vector<std::string> key;
    key.reserve(p.size());
    for (const auto& x : p) key.push_back(x.str());
    if (!seen.insert(std::move(key)).second) continue;
    ps.pts.push_back(std::move(p));
  }
  return ps;
}

}  // namespace

PointSet<ExactInt> gen_points_int(long n, int d, Distribution dist, std::uint64_t seed) {
  return gen_pointset<ExactInt>(n, d, dist, seed);
}

PointSet<ExactRat> gen_points_rat(long n, int d, Distribution dist, std::uint64_t seed) {
  return gen_pointset<ExactRat>(n, d, dist, seed);
}

AnyPointSet gen_points(long n, int d, Distribution dist, Scenario s, std::uint64_t seed) {
  if (scenario_is_integer(s)) return gen_points_int(n, d, dist, seed);
  return gen_points_rat(n, d, dist, seed);
}

}  // namespace dynhull
