#include "dynhull/scalar.hpp"

#include <stdexcept>

namespace dynhull {

namespace {

// Rough heap footprint constants for the stats/bench columns. GMP stores
// limbs out of line; the struct itself is 16 bytes on 64-bit.
constexpr std::size_t kMpzStructBytes = 16;

std::size_t mpz_bytes(const mpz_class& v) {
  return kMpzStructBytes + mpz_size(v.get_mpz_t()) * sizeof(mp_limb_t);
}

}  // namespace

ExactInt::ExactInt(const std::string& decimal) {
  try {
    v_ = mpz_class(decimal, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a decimal integer: '" + decimal + "'");
  }
}

std::size_t ExactInt::bytes_estimate() const { return mpz_bytes(v_); }

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw DivisionByZero("exact_div by zero");
  detail::bump_div();
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  if (sgn(r) != 0) {
    throw NonExactDivision("exact_div remainder is nonzero: " + a.str() + " / " + b.str());
  }
  return ExactInt(std::move(q));
}

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num.raw()) / mpq_class(den.raw());
}

ExactRat::ExactRat(const std::string& s) {
  try {
    v_ = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
  if (sgn(mpq_class(v_.get_den())) == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

ExactRat ExactRat::from_double(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return ExactRat(std::move(q));
}

std::size_t ExactRat::bytes_estimate() const {
  return mpz_bytes(mpz_class(v_.get_num())) + mpz_bytes(mpz_class(v_.get_den()));
}

ExactRat exact_div(const ExactRat& a, const ExactRat& b) { return a / b; }

}  // namespace dynhull
