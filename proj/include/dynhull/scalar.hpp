#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "dynhull/errors.hpp"

namespace dynhull {

/// Tally of exact arithmetic operations. Fused multiply-accumulate
/// (add_mul / sub_mul) counts as one multiplication: it maps to a single
/// GMP primitive (mpz_addmul) and is the unit the update-cost bounds are
/// stated in. Comparisons, sign tests and abs are free.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t divs = 0;

  std::uint64_t total() const { return adds + muls + divs; }
  void reset() { adds = muls = divs = 0; }
};

namespace detail {

inline thread_local OpCounter* tl_op_counter = nullptr;

inline void bump_add() {
  if (tl_op_counter) ++tl_op_counter->adds;
}
inline void bump_mul() {
  if (tl_op_counter) ++tl_op_counter->muls;
}
inline void bump_div() {
  if (tl_op_counter) ++tl_op_counter->divs;
}

}  // namespace detail

/// Routes this thread's scalar operations into a counter for the scope's
/// lifetime. Scopes nest; the previous counter is restored on exit.
class CountScope {
 public:
  explicit CountScope(OpCounter& c) : prev_(detail::tl_op_counter) {
    detail::tl_op_counter = &c;
  }
  ~CountScope() { detail::tl_op_counter = prev_; }

  CountScope(const CountScope&) = delete;
  CountScope& operator=(const CountScope&) = delete;

 private:
  OpCounter* prev_;
};

/// Arbitrary-precision integer. Arithmetic is exact; operations are
/// reported to the active CountScope, if any.
class ExactInt {
 public:
  ExactInt() : v_(0) {}
  ExactInt(long v) : v_(v) {}  // NOLINT: implicit for literals
  explicit ExactInt(const std::string& decimal);
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  const mpz_class& raw() const { return v_; }
  mpz_class& raw() { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  std::string str() const { return v_.get_str(); }

  /// Bits in |v|; 1 for zero (matches mpz_sizeinbase).
  std::size_t bit_size() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }
  std::size_t bytes_estimate() const;

  ExactInt operator-() const {
    detail::bump_add();
    return ExactInt(mpz_class(-v_));
  }
  ExactInt& operator+=(const ExactInt& o) {
    detail::bump_add();
    v_ += o.v_;
    return *this;
  }
  ExactInt& operator-=(const ExactInt& o) {
    detail::bump_add();
    v_ -= o.v_;
    return *this;
  }
  ExactInt& operator*=(const ExactInt& o) {
    detail::bump_mul();
    v_ *= o.v_;
    return *this;
  }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

  /// *this += a*b as one fused operation (single GMP primitive),
  /// counted as one multiplication.
  void add_mul(const ExactInt& a, const ExactInt& b) {
    detail::bump_mul();
    mpz_addmul(v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  }
  /// *this -= a*b, counted as one multiplication.
  void sub_mul(const ExactInt& a, const ExactInt& b) {
    detail::bump_mul();
    mpz_submul(v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  }

  bool operator==(const ExactInt& o) const { return cmp(v_, o.v_) == 0; }
  std::strong_ordering operator<=>(const ExactInt& o) const {
    int c = cmp(v_, o.v_);
    return c <=> 0;
  }

  friend ExactInt abs(const ExactInt& a) { return ExactInt(mpz_class(::abs(a.v_))); }

 private:
  mpz_class v_;
};

/// Quotient a/b when b divides a exactly; throws NonExactDivision otherwise
/// and DivisionByZero for b == 0. Counts as one division.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);

/// Arbitrary-precision rational, always kept canonical: gcd(num, den) == 1
/// and den > 0.
class ExactRat {
 public:
  ExactRat() : v_(0) {}
  ExactRat(long v) : v_(v) {}  // NOLINT: implicit for literals
  ExactRat(const ExactInt& n) : v_(n.raw()) {}  // NOLINT: ring embeds in field
  ExactRat(const ExactInt& num, const ExactInt& den);
  explicit ExactRat(const std::string& s);  // "p" or "p/q"
  explicit ExactRat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Exact binary value of x (never rounds).
  static ExactRat from_double(double x);

  const mpq_class& raw() const { return v_; }
  ExactInt num() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt den() const { return ExactInt(mpz_class(v_.get_den())); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  std::string str() const { return v_.get_str(); }
  std::size_t bytes_estimate() const;

  ExactRat operator-() const {
    detail::bump_add();
    return ExactRat(mpq_class(-v_));
  }
  ExactRat& operator+=(const ExactRat& o) {
    detail::bump_add();
    v_ += o.v_;
    return *this;
  }
  ExactRat& operator-=(const ExactRat& o) {
    detail::bump_add();
    v_ -= o.v_;
    return *this;
  }
  ExactRat& operator*=(const ExactRat& o) {
    detail::bump_mul();
    v_ *= o.v_;
    return *this;
  }
  ExactRat& operator/=(const ExactRat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    detail::bump_div();
    v_ /= o.v_;
    return *this;
  }

  friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
  friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
  friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
  friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }

  /// *this += a*b, counted as one multiplication (same convention as the
  /// integer kernel so op bounds are scalar-agnostic).
  void add_mul(const ExactRat& a, const ExactRat& b) {
    detail::bump_mul();
    v_ += a.v_ * b.v_;
  }
  void sub_mul(const ExactRat& a, const ExactRat& b) {
    detail::bump_mul();
    v_ -= a.v_ * b.v_;
  }

  bool operator==(const ExactRat& o) const { return cmp(v_, o.v_) == 0; }
  std::strong_ordering operator<=>(const ExactRat& o) const {
    int c = cmp(v_, o.v_);
    return c <=> 0;
  }

  friend ExactRat abs(const ExactRat& a) { return ExactRat(mpq_class(::abs(a.v_))); }

 private:
  mpq_class v_;
};

/// In a field every division by nonzero is exact.
ExactRat exact_div(const ExactRat& a, const ExactRat& b);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<ExactInt> {
  static constexpr bool is_field = false;
  static constexpr const char* name = "int";
};

template <>
struct scalar_traits<ExactRat> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "rat";
};

}  // namespace dynhull
