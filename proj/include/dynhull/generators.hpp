#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynhull/dyndet.hpp"
#include "dynhull/errors.hpp"
#include "dynhull/geometry.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/rng.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

/// Coefficient scenarios: (a) rationals with 10000-bit numerator and
/// denominator, (b) rationals m*2^p from the double grid (|m| < 2^53,
/// |p| < 2^11), (c) integers of bit-size 10000, (d) integers of bit-size 32.
enum class Scenario { A, B, C, D };

/// Point distributions: uniform in the cube [-100,100]^d, uniform in the
/// origin-centered ball of radius 100, uniform on that ball's surface.
enum class Distribution { Cube, Ball, Sphere };

Scenario parse_scenario(std::string_view s);        // "a".."d"
Distribution parse_distribution(std::string_view);  // "cube|ball|sphere" or "i|ii|iii"
char scenario_tag(Scenario);
const char* distribution_name(Distribution);

/// Integer scenarios carry ExactInt coefficients, rational ones ExactRat.
inline bool scenario_is_integer(Scenario s) { return s == Scenario::C || s == Scenario::D; }

/// One free coefficient of the scenario's declared bit-size, random sign.
ExactInt gen_int_coeff(Scenario s, DetRng& rng);
ExactRat gen_rat_coeff(Scenario s, DetRng& rng);

/// A random base matrix plus a chain of column replacements, every prefix
/// of which is non-singular (candidates producing det 0 are redrawn).
template <class S>
struct MatrixChain {
  SquareMatrix<S> base;
  std::vector<ColumnUpdate<S>> updates;
};

MatrixChain<ExactInt> gen_matrix_int(int d, Scenario s, std::uint64_t seed, std::size_t n_updates);
MatrixChain<ExactRat> gen_matrix_rat(int d, Scenario s, std::uint64_t seed, std::size_t n_updates);

/// Random point sets. The scenario selects the coordinate grid: integer
/// scenarios draw integer coordinates, rational scenarios draw exact
/// double values; the 10000-bit sizes of scenarios (a)/(c) apply to free
/// coefficients (matrices), not to coordinates bounded by the geometry.
/// Points are distinct (duplicates are redrawn).
PointSet<ExactInt> gen_points_int(long n, int d, Distribution dist, std::uint64_t seed);
PointSet<ExactRat> gen_points_rat(long n, int d, Distribution dist, std::uint64_t seed);
AnyPointSet gen_points(long n, int d, Distribution dist, Scenario s, std::uint64_t seed);

}  // namespace dynhull
