#include "doctest.h"
#include "icosa/binary_form.hpp"
#include "icosa/fields.hpp"
#include "icosa/rng.hpp"

using namespace icosa;

namespace {
BinaryForm<Rational> rand_form(SplitMix64& rng, int deg) {
  std::vector<Rational> u(deg + 1);
  for (auto& c : u) c = rng.next_rational(6, 3);
  if (is_zero(u[0])) u[0] = Rational(1);  // keep the formal degree honest
  return BinaryForm<Rational>(std::move(u));
}

BinaryForm<Rational> mul_forms(const BinaryForm<Rational>& p, const BinaryForm<Rational>& q) {
  std::vector<Rational> u(p.degree() + q.degree() + 1, Rational(0));
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; j <= q.degree(); ++j) u[i + j] += p.u[i] * q.u[j];
  return BinaryForm<Rational>(std::move(u));
}
}  // namespace

TEST_CASE("resultant of the pure powers") {
  // Res(z1^5, z2^5) = 1: disjoint root sets (all at zero vs all at infinity).
  BinaryForm<Rational> p(std::vector<Rational>{1, 0, 0, 0, 0, 0});
  BinaryForm<Rational> q(std::vector<Rational>{0, 0, 0, 0, 0, 1});
  CHECK(resultant(p, q) == Rational(1));
}

TEST_CASE("resultant of the partials of z1^6 - z2^6") {
  BinaryForm<Rational> f(std::vector<Rational>{1, 0, 0, 0, 0, 0, -1});
  const auto f1 = bf_derivative_z1(f);
  const auto f2 = bf_derivative_z2(f);
  REQUIRE(f1.degree() == 5);
  REQUIRE(f2.degree() == 5);
  // 6^10 with the sign fixed by the Sylvester layout (p-rows first).
  CHECK(resultant(f1, f2) == -rational_pow(Rational(6), 10));
}

TEST_CASE("resultant detects a shared root exactly") {
  SplitMix64 rng(0x5e5u);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = rng.next_rational(5, 3);
    // Shared factor z1 - a z2.
    BinaryForm<Rational> shared(std::vector<Rational>{1, -a});
    const auto p = mul_forms(shared, rand_form(rng, 2));
    const auto q = mul_forms(shared, rand_form(rng, 3));
    CHECK(resultant(p, q) == Rational(0));
  }
}

TEST_CASE("resultant is multiplicative and graded-symmetric") {
  SplitMix64 rng(0xab5u);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = rand_form(rng, 2);
    const auto q = rand_form(rng, 2);
    const auto r = rand_form(rng, 3);
    CHECK(resultant(mul_forms(p, q), r) == resultant(p, r) * resultant(q, r));
    const Rational sign = (p.degree() * r.degree()) % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(resultant(p, r) == sign * resultant(r, p));
  }
}

TEST_CASE("degree-0 conventions and zero rejection") {
  BinaryForm<Rational> c(std::vector<Rational>{Rational(3)});
  BinaryForm<Rational> q(std::vector<Rational>{1, 0, -1});
  CHECK(resultant(c, q) == Rational(9));
  CHECK(resultant(q, c) == Rational(9));
  BinaryForm<Rational> z(std::vector<Rational>{0, 0});
  CHECK_THROWS_AS(resultant(z, q), std::invalid_argument);
}

TEST_CASE("euler identity for the formal derivatives") {
  SplitMix64 rng(0xe41e4u);
  const auto p = rand_form(rng, 6);
  const auto p1 = bf_derivative_z1(p);
  const auto p2 = bf_derivative_z2(p);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational z1 = rng.next_rational(4, 3), z2 = rng.next_rational(4, 3);
    CHECK(z1 * p1.evaluate(z1, z2) + z2 * p2.evaluate(z1, z2) ==
          Rational(6) * p.evaluate(z1, z2));
  }
}

TEST_CASE("conversion between binary forms and polynomials") {
  BinaryForm<Rational> p(std::vector<Rational>{2, 0, -3, 1});
  const auto poly = binary_to_poly(p);
  CHECK(poly.coefficient({3, 0}) == Rational(2));
  CHECK(poly.coefficient({1, 2}) == Rational(-3));
  CHECK(poly_to_binary(poly, 3) == p);

  auto bad = poly + MultiPoly<Rational>::constant(binary_vars(), Rational(1));
  CHECK_THROWS_AS(poly_to_binary(bad, 3), std::invalid_argument);
}
