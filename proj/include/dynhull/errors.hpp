#pragma once

#include <stdexcept>

namespace dynhull {

/// Base class for all dynhull errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division with zero divisor.
struct DivisionByZero : Error {
  using Error::Error;
};

/// exact_div called on a non-divisible pair; signals a broken invariant
/// upstream (e.g. a singular update slipped through).
struct NonExactDivision : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

/// A column replacement that would make the matrix singular; the state it
/// was attempted on is left unchanged.
struct SingularUpdate : Error {
  using Error::Error;
};

/// Input violates the general-position assumption (some d+1 points are
/// affinely dependent).
struct DegenerateInput : Error {
  using Error::Error;
};

/// Reserved for point-location walks that cannot certify containment.
/// The current walk resolves zero predicates by boundary-inclusive
/// containment and does not throw it.
struct DegenerateQuery : Error {
  using Error::Error;
};

struct TooFewPoints : Error {
  using Error::Error;
};

/// A ridge queried against the predicate cache is not on the current
/// boundary (caller bug), or the triangulation was built without states.
struct CacheMiss : Error {
  using Error::Error;
};

struct InvalidScenario : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace dynhull
