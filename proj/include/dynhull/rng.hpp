#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace dynhull {

/// Deterministic random source: mt19937_64 with hand-rolled mappings, so a
/// seed reproduces the same stream regardless of standard library. (The
/// std distributions are implementation-defined and are avoided.)
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, bound), rejection-sampled (unbiased). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  /// Standard normal via Marsaglia's polar method (sqrt/log only; both are
  /// correctly rounded in practice, keeping streams reproducible).
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  /// Uniform nonnegative integer of exactly `bits` bits (msb set).
  mpz_class exact_bits(unsigned bits) {
    mpz_class v = 1;
    for (unsigned produced = 1; produced < bits;) {
      const unsigned take = std::min(64u, bits - produced);
      std::uint64_t w = gen_();
      if (take < 64) w >>= (64 - take);
      mpz_class chunk(static_cast<unsigned long>(w >> 32));
      chunk <<= 32;
      chunk += static_cast<unsigned long>(w & 0xffffffffull);
      if (take < 64) {
        v <<= take;
        v += chunk & ((mpz_class(1) << take) - 1);
      } else {
        v <<= 64;
        v += chunk;
      }
      produced += take;
    }
    return v;
  }

  /// exact_bits with a uniformly random sign.
  mpz_class signed_bits(unsigned bits) {
    mpz_class v = exact_bits(bits);
    if (gen_() & 1) v = -v;
    return v;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace dynhull
