#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "icosa/rational.hpp"

namespace icosa {

// Deterministic 64-bit generator (SplitMix64).  Used instead of <random>
// engines/distributions so that seeded runs reproduce bit-for-bit across
// standard libraries and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).  Modulo bias is irrelevant at test scales.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  // Uniform integer in [lo, hi], inclusive.
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (deterministic given the seed).
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = next_unit();
    const double v = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::complex<double> next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
  }

  // Random nonzero-denominator rational with numerator in [-span, span]
  // and denominator in [1, den_span].
  Rational next_rational(long span, long den_span) {
    const long num = next_int(-span, span);
    const long den = next_int(1, den_span);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace icosa
