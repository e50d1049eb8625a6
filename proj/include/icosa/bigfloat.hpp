#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "icosa/fields.hpp"

namespace icosa {

// Arbitrary-precision real scalar backed by MPFR. Every value carries its
// own precision in bits; arithmetic rounds to the larger operand precision
// (round-to-nearest), so precision never silently degrades below either input.
class BigFloat {
 public:
  BigFloat();                   // 0 at 53 bits
  BigFloat(int v);              // NOLINT: implicit, needed by generic code
  // 0 carried at the given precision; the seed for higher-precision work.
  static BigFloat zero_at(long precision_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& q, long precision_bits);
  static BigFloat from_double(double d, long precision_bits);
  static BigFloat sqrt_of_ui(unsigned long v, long precision_bits);
  static BigFloat two_pow(long e, long precision_bits);  // 2^e

  long precision() const;
  double to_double() const;
  // Scientific-notation decimal string with the given significant digits.
  std::string decimal(int digits) const;

  bool is_zero_value() const;
  int sign() const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
  BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator>(const BigFloat& a, const BigFloat& b);
  friend bool operator>=(const BigFloat& a, const BigFloat& b);

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);  // pre: a >= 0
  friend BigFloat max(const BigFloat& a, const BigFloat& b);
  friend BigFloat min(const BigFloat& a, const BigFloat& b);

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

 private:
  mpfr_t value_;
};

inline bool is_zero(const BigFloat& x) { return x.is_zero_value(); }

// Complex number with BigFloat components.
struct BigComplex {
  BigFloat re, im;

  BigComplex() = default;
  BigComplex(int v) : re(v), im(0) {}  // NOLINT: implicit, for generic code
  BigComplex(BigFloat re_, BigFloat im_) : re(std::move(re_)), im(std::move(im_)) {}

  static BigComplex from_rational(const Rational& q, long precision_bits);
  static BigComplex from_qsqrt5(const QSqrt5& x, long precision_bits);
  static BigComplex from_qisqrt5(const QISqrt5& x, long precision_bits);
  static BigComplex from_complex_double(const std::complex<double>& z, long precision_bits);

  long precision() const { return std::max(re.precision(), im.precision()); }
  std::complex<double> to_complex_double() const { return {re.to_double(), im.to_double()}; }
  BigComplex conjugate() const { return {re, -im}; }
  BigFloat abs_value() const;

  BigComplex operator-() const { return {-re, -im}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const BigComplex& z) {
  return z.re.is_zero_value() && z.im.is_zero_value();
}

}  // namespace icosa
