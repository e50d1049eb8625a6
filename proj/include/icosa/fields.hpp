#pragma once

#include <complex>
#include <utility>

#include "icosa/rational.hpp"

namespace icosa {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
struct QSqrt5 {
  Rational a, b;

  QSqrt5() : a(0), b(0) {}
  QSqrt5(int n) : a(n), b(0) {}              // NOLINT: implicit embedding of Z
  QSqrt5(const Rational& r) : a(r), b(0) {}  // NOLINT: implicit embedding of Q
  QSqrt5(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  static QSqrt5 sqrt5() { return QSqrt5(Rational(0), Rational(1)); }
  // Golden ratio (1 + sqrt5)/2, the fundamental unit up to sign.
  static QSqrt5 golden() { return QSqrt5(Rational(1, 2), Rational(1, 2)); }

  // Galois conjugate sqrt5 -> -sqrt5.
  QSqrt5 conjugate() const { return QSqrt5(a, -b); }
  Rational field_norm() const { return a * a - 5 * b * b; }

  QSqrt5 operator-() const { return QSqrt5(-a, -b); }
  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) {
    return QSqrt5(x.a + y.a, x.b + y.b);
  }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) {
    return QSqrt5(x.a - y.a, x.b - y.b);
  }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return QSqrt5(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  QSqrt5 inverse() const {
    // field_norm = 0 would make sqrt5 rational, so it only vanishes at 0.
    const Rational n = field_norm();
    if (is_zero(n)) throw std::domain_error("division by zero in Q(sqrt5)");
    return QSqrt5(a / n, -b / n);
  }
  friend QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) {
    return x * y.inverse();
  }
  QSqrt5& operator+=(const QSqrt5& y) { return *this = *this + y; }
  QSqrt5& operator-=(const QSqrt5& y) { return *this = *this - y; }
  QSqrt5& operator*=(const QSqrt5& y) { return *this = *this * y; }
  QSqrt5& operator/=(const QSqrt5& y) { return *this = *this / y; }
  bool operator==(const QSqrt5&) const = default;
};

inline bool is_zero(const QSqrt5& x) { return is_zero(x.a) && is_zero(x.b); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline double to_double(const QSqrt5& x) {
  return x.a.get_d() + x.b.get_d() * 2.2360679774997896964091736687747;
}

inline std::string to_string(const QSqrt5& x) {
  return to_string(x.a) + " + (" + to_string(x.b) + ")*sqrt5";
}

// Element re + i*im of Q(i, sqrt5), with re, im in Q(sqrt5).
struct QISqrt5 {
  QSqrt5 re, im;

  QISqrt5() = default;
  QISqrt5(int n) : re(n) {}                 // NOLINT: implicit embedding
  QISqrt5(const Rational& r) : re(r) {}     // NOLINT: implicit embedding
  QISqrt5(const QSqrt5& r) : re(r) {}       // NOLINT: implicit embedding
  QISqrt5(QSqrt5 re_, QSqrt5 im_) : re(std::move(re_)), im(std::move(im_)) {}

  static QISqrt5 i() { return QISqrt5(QSqrt5(0), QSqrt5(1)); }
  static QISqrt5 sqrt5() { return QISqrt5(QSqrt5::sqrt5(), QSqrt5(0)); }

  QISqrt5 conjugate() const { return QISqrt5(re, -im); }  // i -> -i

  QISqrt5 operator-() const { return QISqrt5(-re, -im); }
  friend QISqrt5 operator+(const QISqrt5& x, const QISqrt5& y) {
    return QISqrt5(x.re + y.re, x.im + y.im);
  }
  friend QISqrt5 operator-(const QISqrt5& x, const QISqrt5& y) {
    return QISqrt5(x.re - y.re, x.im - y.im);
  }
  friend QISqrt5 operator*(const QISqrt5& x, const QISqrt5& y) {
    return QISqrt5(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  QISqrt5 inverse() const {
    // re^2 + im^2 = 0 forces re = im = 0 because Q(sqrt5) embeds in R.
    const QSqrt5 n = re * re + im * im;
    if (is_zero(n)) throw std::domain_error("division by zero in Q(i,sqrt5)");
    const QSqrt5 ninv = n.inverse();
    return QISqrt5(re * ninv, -im * ninv);
  }
  friend QISqrt5 operator/(const QISqrt5& x, const QISqrt5& y) {
    return x * y.inverse();
  }
  QISqrt5& operator+=(const QISqrt5& y) { return *this = *this + y; }
  QISqrt5& operator-=(const QISqrt5& y) { return *this = *this - y; }
  QISqrt5& operator*=(const QISqrt5& y) { return *this = *this * y; }
  QISqrt5& operator/=(const QISqrt5& y) { return *this = *this / y; }
  bool operator==(const QISqrt5&) const = default;
};

inline bool is_zero(const QISqrt5& x) { return is_zero(x.re) && is_zero(x.im); }

inline std::complex<double> to_complex(const QISqrt5& x) {
  return {to_double(x.re), to_double(x.im)};
}

inline std::string to_string(const QISqrt5& x) {
  return "(" + to_string(x.re) + ") + i*(" + to_string(x.im) + ")";
}

// Zero tests for the builtin numeric scalars used by the same templates.
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& z) {
  return z.real() == 0.0 && z.imag() == 0.0;
}

}  // namespace icosa
