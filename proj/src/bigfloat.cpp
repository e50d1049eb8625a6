#include "icosa/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace icosa {

namespace {
constexpr long kDefaultPrec = 53;
long checked_prec(long bits) {
  if (bits < MPFR_PREC_MIN) return kDefaultPrec;
  return bits;
}
}  // namespace

BigFloat::BigFloat() {
  mpfr_init2(value_, kDefaultPrec);
  mpfr_set_zero(value_, 1);
}

BigFloat BigFloat::zero_at(long precision_bits) {
  BigFloat out;
  mpfr_set_prec(out.value_, checked_prec(precision_bits));
  mpfr_set_zero(out.value_, 1);
  return out;
}

BigFloat::BigFloat(int v) {
  mpfr_init2(value_, kDefaultPrec);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(value_, o.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& q, long precision_bits) {
  BigFloat out = zero_at(precision_bits);
  mpfr_set_q(out.value_, q.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from_double(double d, long precision_bits) {
  BigFloat out = zero_at(precision_bits);
  mpfr_set_d(out.value_, d, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqrt_of_ui(unsigned long v, long precision_bits) {
  BigFloat out = zero_at(precision_bits);
  mpfr_sqrt_ui(out.value_, v, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::two_pow(long e, long precision_bits) {
  BigFloat out = zero_at(precision_bits);
  mpfr_set_si_2exp(out.value_, 1, e, MPFR_RNDN);
  return out;
}

long BigFloat::precision() const { return mpfr_get_prec(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

bool BigFloat::is_zero_value() const { return mpfr_zero_p(value_) != 0; }

int BigFloat::sign() const { return mpfr_sgn(value_); }

BigFloat BigFloat::operator-() const {
  BigFloat out = zero_at(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {
long join_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out = BigFloat::zero_at(join_prec(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out = BigFloat::zero_at(join_prec(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out = BigFloat::zero_at(join_prec(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero_value()) throw std::domain_error("BigFloat division by zero");
  BigFloat out = BigFloat::zero_at(join_prec(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.raw(), b.raw()) == 0;
}
bool operator<(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.raw(), b.raw()) < 0;
}
bool operator<=(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.raw(), b.raw()) <= 0;
}
bool operator>(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.raw(), b.raw()) > 0;
}
bool operator>=(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.raw(), b.raw()) >= 0;
}

BigFloat abs(const BigFloat& a) {
  BigFloat out = BigFloat::zero_at(a.precision());
  mpfr_abs(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& a) {
  if (a.sign() < 0) throw std::domain_error("BigFloat sqrt of negative value");
  BigFloat out = BigFloat::zero_at(a.precision());
  mpfr_sqrt(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

BigComplex BigComplex::from_rational(const Rational& q, long precision_bits) {
  return {BigFloat::from_rational(q, precision_bits), BigFloat::zero_at(precision_bits)};
}

BigComplex BigComplex::from_qsqrt5(const QSqrt5& x, long precision_bits) {
  const BigFloat root5 = BigFloat::sqrt_of_ui(5, precision_bits);
  return {BigFloat::from_rational(x.a, precision_bits) +
              BigFloat::from_rational(x.b, precision_bits) * root5,
          BigFloat::zero_at(precision_bits)};
}

BigComplex BigComplex::from_qisqrt5(const QISqrt5& x, long precision_bits) {
  const BigFloat root5 = BigFloat::sqrt_of_ui(5, precision_bits);
  return {BigFloat::from_rational(x.re.a, precision_bits) +
              BigFloat::from_rational(x.re.b, precision_bits) * root5,
          BigFloat::from_rational(x.im.a, precision_bits) +
              BigFloat::from_rational(x.im.b, precision_bits) * root5};
}

BigComplex BigComplex::from_complex_double(const std::complex<double>& z,
                                           long precision_bits) {
  return {BigFloat::from_double(z.real(), precision_bits),
          BigFloat::from_double(z.imag(), precision_bits)};
}

BigFloat BigComplex::abs_value() const {
  BigFloat out = BigFloat::zero_at(precision());
  mpfr_hypot(out.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return out;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigFloat denom = b.re * b.re + b.im * b.im;
  if (denom.is_zero_value()) throw std::domain_error("BigComplex division by zero");
  return {(a.re * b.re + a.im * b.im) / denom,
          (a.im * b.re - a.re * b.im) / denom};
}

}  // namespace icosa
