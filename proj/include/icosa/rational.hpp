#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace icosa {

// Exact rational scalar backed by GMP. Values are kept canonical
// (gcd(num, den) = 1, den > 0); every construction path below canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "p", "-p", or "p/q" in base 10.
inline Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_pow(Rational base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw std::domain_error("0 raised to a negative power");
    base = 1 / base;
    e = -e;
  }
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Exact square root; empty unless q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const BigInt num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn) / Rational(rd);
}

inline BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace icosa
