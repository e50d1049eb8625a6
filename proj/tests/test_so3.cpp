#include <vector>

#include "doctest.h"
#include "icosa/rng.hpp"
#include "icosa/so3.hpp"

using namespace icosa;

namespace {

MultiPoly<QISqrt5> qi_poly(const MultiPoly<Rational>& p) {
  return map_poly<QISqrt5>(p, [](const Rational& c) { return QISqrt5(c); });
}

MultiPoly<QISqrt5> qi_poly5(const MultiPoly<QSqrt5>& p) {
  return map_poly<QISqrt5>(p, [](const QSqrt5& c) { return QISqrt5(c); });
}

Matrix<QISqrt5> qi_matrix(const Matrix<QSqrt5>& m) {
  Matrix<QISqrt5> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = QISqrt5(m.at(i, j));
  return out;
}

Vec3<Rational> random_vec(SplitMix64& rng) {
  return {rng.next_rational(5, 3), rng.next_rational(5, 3), rng.next_rational(5, 3)};
}

MultiPoly<Rational> random_harmonic_cubic(SplitMix64& rng) {
  static const auto basis = rational_harmonic_basis(3);
  MultiPoly<Rational> f(ternary_vars());
  for (const auto& b : basis) f += b.scaled(rng.next_rational(6, 4));
  return f;
}

// Coefficient matrix of polynomials against the fixed monomial order.
template <class S>
Matrix<S> coefficient_matrix(const std::vector<MultiPoly<S>>& polys, int d) {
  const auto mons = degree_monomials(d);
  Matrix<S> m(polys.size(), mons.size());
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j < mons.size(); ++j)
      m.at(i, j) = polys[i].coefficient(mons[j]);
  return m;
}

BinaryForm<QISqrt5> to_binary_or_zero(const MultiPoly<QISqrt5>& f, int two_d) {
  if (f.is_zero_poly())
    return BinaryForm<QISqrt5>(std::vector<QISqrt5>(size_t(two_d) + 1, QISqrt5(0)));
  return harmonic_to_binary(f);
}

// The standard sl2 operators on binary forms of degree 2d, in the coefficient
// slots u[j] of z1^(2d-j) z2^j: the Cartan (z2 d2 - z1 d1)/2 scales slot j by
// j - d; z2 d1 raises slots; z1 d2 lowers slots.
BinaryForm<QISqrt5> bin_h(const BinaryForm<QISqrt5>& p) {
  const int deg = p.degree();
  BinaryForm<QISqrt5> out = p;
  for (int j = 0; j <= deg; ++j)
    out.u[size_t(j)] = p.u[size_t(j)] * QISqrt5(Rational(2 * j - deg, 2));
  return out;
}

BinaryForm<QISqrt5> bin_raise(const BinaryForm<QISqrt5>& p) {  // z2 d/dz1
  const int deg = p.degree();
  std::vector<QISqrt5> u(size_t(deg) + 1, QISqrt5(0));
  for (int j = 0; j + 1 <= deg; ++j) u[size_t(j + 1)] += p.u[size_t(j)] * QISqrt5(deg - j);
  return BinaryForm<QISqrt5>(std::move(u));
}

BinaryForm<QISqrt5> bin_lower(const BinaryForm<QISqrt5>& p) {  // z1 d/dz2
  const int deg = p.degree();
  std::vector<QISqrt5> u(size_t(deg) + 1, QISqrt5(0));
  for (int j = 1; j <= deg; ++j) u[size_t(j - 1)] += p.u[size_t(j)] * QISqrt5(j);
  return BinaryForm<QISqrt5>(std::move(u));
}

BinaryForm<QISqrt5> bin_scale(BinaryForm<QISqrt5> p, const QISqrt5& c) {
  for (auto& x : p.u) x = x * c;
  return p;
}

}  // namespace

TEST_CASE("degree monomial order is lexicographically descending") {
  const std::vector<std::vector<int>> cubic = {
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  CHECK(degree_monomials(3) == cubic);
  const std::vector<std::vector<int>> lin = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(degree_monomials(1) == lin);
  for (int d = 0; d <= 6; ++d)
    CHECK(degree_monomials(d).size() == size_t((d + 1) * (d + 2)) / 2);
  CHECK_THROWS_AS(degree_monomials(-1), std::invalid_argument);
}

TEST_CASE("rational harmonic basis has dimension 2d+1") {
  for (int d = 1; d <= 4; ++d) {
    const auto basis = rational_harmonic_basis(d);
    REQUIRE(basis.size() == size_t(2 * d + 1));
    for (const auto& f : basis) {
      int deg = 0;
      CHECK(f.is_homogeneous(&deg));
      CHECK(deg == d);
      CHECK(is_harmonic(f));
    }
    CHECK(rank(coefficient_matrix(basis, d)) == size_t(2 * d + 1));
  }
  CHECK_THROWS_AS(rational_harmonic_basis(0), std::invalid_argument);
  CHECK_THROWS_AS(rational_harmonic_basis(9), std::invalid_argument);
}

TEST_CASE("weight basis ladder for d=1 matches the hand computation") {
  const auto wb = weight_basis(1);
  REQUIRE(wb.v.size() == 3);

  MultiPoly<QISqrt5> top(ternary_vars());  // x1 + i x2, the highest weight
  top.add_term({1, 0, 0}, QISqrt5(1));
  top.add_term({0, 1, 0}, QISqrt5::i());
  CHECK(wb.v[2] == top);

  MultiPoly<QISqrt5> mid(ternary_vars());  // n^- (x1 + i x2) = 2i x3
  mid.add_term({0, 0, 1}, QISqrt5(2) * QISqrt5::i());
  CHECK(wb.v[1] == mid);

  MultiPoly<QISqrt5> bot(ternary_vars());  // n^- (2i x3) = 2(x1 - i x2)
  bot.add_term({1, 0, 0}, QISqrt5(2));
  bot.add_term({0, 1, 0}, QISqrt5(-2) * QISqrt5::i());
  CHECK(wb.v[0] == bot);
}

TEST_CASE("weight basis structure for d=3") {
  const auto wb = weight_basis(3);
  REQUIRE(wb.v.size() == 7);
  for (const auto& f : wb.v) {
    int deg = 0;
    CHECK(f.is_homogeneous(&deg));
    CHECK(deg == 3);
    CHECK(is_harmonic(f));
  }

  // h v_m = m v_m, both as polynomials and as the coordinate matrix.
  for (int k = 0; k < 7; ++k) {
    CHECK(apply_h(wb.v[size_t(k)]) == wb.v[size_t(k)].scaled(QISqrt5(k - 3)));
    for (int r = 0; r < 7; ++r)
      CHECK(wb.h.at(size_t(r), size_t(k)) ==
            (r == k ? QISqrt5(k - 3) : QISqrt5(0)));
  }

  // n^+ strictly raises the weight and kills the top; n^- strictly lowers
  // with unit matrix entries (unnormalized ladder) and kills the bottom.
  for (int k = 0; k < 7; ++k)
    for (int r = 0; r < 7; ++r) {
      if (r != k + 1) CHECK(is_zero(wb.n_plus.at(size_t(r), size_t(k))));
      CHECK(wb.n_minus.at(size_t(r), size_t(k)) ==
            (r == k - 1 ? QISqrt5(1) : QISqrt5(0)));
    }
  for (int r = 0; r < 7; ++r) CHECK(is_zero(wb.n_plus.at(size_t(r), 6)));

  // Commutation relations as exact matrix identities.
  CHECK(wb.h * wb.n_plus - wb.n_plus * wb.h == wb.n_plus);
  CHECK(wb.h * wb.n_minus - wb.n_minus * wb.h == wb.n_minus.scaled(QISqrt5(-1)));
  // Normalization of the ladder pair in this basis.
  CHECK(wb.n_plus * wb.n_minus - wb.n_minus * wb.n_plus ==
        wb.h.scaled(QISqrt5(-2)));

  // The weight-0 member is proportional to the axis cubic of e3.
  const auto f_e3 = axis_cubic<QISqrt5>({QISqrt5(0), QISqrt5(0), QISqrt5(1)});
  const auto coords = coordinates_in_span({wb.v[3]}, f_e3);
  REQUIRE(coords.has_value());
  CHECK(!is_zero((*coords)[0]));

  // The invariant pairing couples weights m and -m only (antidiagonal Gram).
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k) {
      if (j + k == 6) CHECK(!is_zero(wb.gram.at(size_t(j), size_t(k))));
      else CHECK(is_zero(wb.gram.at(size_t(j), size_t(k))));
    }

  CHECK_THROWS_AS(weight_basis(0), std::invalid_argument);
  CHECK_THROWS_AS(weight_basis(9), std::invalid_argument);
}

TEST_CASE("weight support identifies components") {
  const auto wb = weight_basis(3);
  CHECK(weight_support(wb.v[6], 3) == std::vector<int>{3});
  CHECK(weight_support(wb.v[0] + wb.v[3], 3) == std::vector<int>{-3, 0});
  // A non-harmonic cubic is outside the representation space.
  const auto xx = quadric_norm<QISqrt5>();
  const auto x3 = MultiPoly<QISqrt5>::variable(ternary_vars(), 2);
  CHECK_THROWS_AS(weight_support(xx * x3, 3), std::invalid_argument);
}

TEST_CASE("invariant pairing reproduces point evaluation") {
  const auto x1cubed =
      MultiPoly<Rational>::monomial(ternary_vars(), {3, 0, 0}, Rational(1));
  const Vec3<Rational> a123 = {Rational(1), Rational(2), Rational(3)};
  CHECK(bombieri_pairing(x1cubed, linear_form(a123).pow(3)) == Rational(1));
  CHECK(bombieri_pairing(x1cubed, x1cubed) == Rational(1));

  SplitMix64 rng(20240811);
  for (int it = 0; it < 20; ++it) {
    const auto f = random_harmonic_cubic(rng);
    const Vec3<Rational> a = random_vec(rng);
    const Rational fa = f.evaluate({a[0], a[1], a[2]});
    // (f, (x,a)^3) = f(a), and the harmonic projection f_a pairs the same way.
    CHECK(bombieri_pairing(f, linear_form(a).pow(3)) == fa);
    CHECK(bombieri_pairing(f, axis_cubic(a)) == fa);
    // Symmetry.
    const auto g = random_harmonic_cubic(rng);
    CHECK(bombieri_pairing(f, g) == bombieri_pairing(g, f));
  }

  const auto x1sq =
      MultiPoly<Rational>::monomial(ternary_vars(), {2, 0, 0}, Rational(1));
  CHECK_THROWS_AS(bombieri_pairing(x1cubed, x1sq), std::invalid_argument);
}

TEST_CASE("rotation action matches its defining vector field") {
  SplitMix64 rng(77001);
  const auto x1 = MultiPoly<Rational>::variable(ternary_vars(), 0);
  const auto x2 = MultiPoly<Rational>::variable(ternary_vars(), 1);

  for (int it = 0; it < 10; ++it) {
    const auto p = random_harmonic_cubic(rng);
    // Rotation about e3 is the vector field x2 d1 - x1 d2.
    const Vec3<Rational> e3 = {Rational(0), Rational(0), Rational(1)};
    CHECK(lie_action(e3, p) == x2 * p.derivative(0) - x1 * p.derivative(1));

    // The invariant quadric is killed by every rotation.
    const Vec3<Rational> u = random_vec(rng);
    CHECK(lie_action(u, quadric_norm<Rational>()).is_zero_poly());

    // Lie algebra homomorphism: [X_u, X_v] = X_{u x v}.
    const Vec3<Rational> v = random_vec(rng);
    CHECK(lie_action(u, lie_action(v, p)) - lie_action(v, lie_action(u, p)) ==
          lie_action(cross(u, v), p));

    // Skew-adjointness for the invariant pairing.
    const auto g = random_harmonic_cubic(rng);
    CHECK(bombieri_pairing(lie_action(u, p), g) ==
          -bombieri_pairing(p, lie_action(u, g)));

    // u . f_a = 3 (x, u x a) [(x,a)^2 - (1/5)(a,a)(x,x)].
    const Vec3<Rational> a = random_vec(rng);
    const auto inner =
        linear_form(a).pow(2) -
        quadric_norm<Rational>().scaled(dot(a, a) * Rational(1, 5));
    CHECK(lie_action(u, axis_cubic(a)) ==
          (linear_form(cross(u, a)) * inner).scaled(Rational(3)));
  }

  // The axis cubic is invariant under rotations about its own axis.
  const Vec3<Rational> e3 = {Rational(0), Rational(0), Rational(1)};
  CHECK(lie_action(e3, axis_cubic(e3)).is_zero_poly());
}

TEST_CASE("axis cubic formula and harmonicity") {
  const Vec3<Rational> e3 = {Rational(0), Rational(0), Rational(1)};
  MultiPoly<Rational> expected(ternary_vars());  // x3^3 - (3/5) x3 (x,x)
  expected.add_term({0, 0, 3}, Rational(2, 5));
  expected.add_term({2, 0, 1}, Rational(-3, 5));
  expected.add_term({0, 2, 1}, Rational(-3, 5));
  CHECK(axis_cubic(e3) == expected);

  SplitMix64 rng(9150);
  for (int it = 0; it < 20; ++it) {
    const Vec3<Rational> a = random_vec(rng);
    const auto fa = axis_cubic(a);
    CHECK(is_harmonic(fa));
    // f_a(a) = (2/5)(a,a)^3.
    const Rational aa = dot(a, a);
    CHECK(fa.evaluate({a[0], a[1], a[2]}) == Rational(2, 5) * aa * aa * aa);
  }

  // For a null axis the correction term vanishes: f_a = (x,a)^3.
  const Vec3<QISqrt5> null_a = {QISqrt5(1), QISqrt5::i(), QISqrt5(0)};
  CHECK(is_zero(dot(null_a, null_a)));
  CHECK(axis_cubic(null_a) == linear_form(null_a).pow(3));

  // Equivariance: rotating the axis rotates the cubic.
  const Rational third(1, 3);
  const auto rot = Matrix<Rational>::from_rows({{2 * third, -2 * third, third},
                                                {2 * third, third, -2 * third},
                                                {third, 2 * third, 2 * third}});
  for (int it = 0; it < 10; ++it) {
    const Vec3<Rational> a = random_vec(rng);
    const auto img = rot.apply({a[0], a[1], a[2]});
    CHECK(rotate_form(rot, axis_cubic(a)) ==
          axis_cubic<Rational>({img[0], img[1], img[2]}));
  }
}

TEST_CASE("null conic parametrization") {
  const auto a = null_param<QISqrt5>();
  // (a(z), a(z)) = 0 identically.
  CHECK((a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).is_zero_poly());
  // a(1,0) = (1, i, 0).
  const std::vector<QISqrt5> p10 = {QISqrt5(1), QISqrt5(0)};
  CHECK(a[0].evaluate(p10) == QISqrt5(1));
  CHECK(a[1].evaluate(p10) == QISqrt5::i());
  CHECK(a[2].evaluate(p10) == QISqrt5(0));
  // a(1,1) = (0, 2i, 2).
  const std::vector<QISqrt5> p11 = {QISqrt5(1), QISqrt5(1)};
  CHECK(a[0].evaluate(p11) == QISqrt5(0));
  CHECK(a[1].evaluate(p11) == QISqrt5(2) * QISqrt5::i());
  CHECK(a[2].evaluate(p11) == QISqrt5(2));
}

TEST_CASE("harmonic cubics map to binary sextics") {
  // The e3 axis cubic restricts to 8 z1^3 z2^3 on the null conic.
  const auto f_e3 = axis_cubic<QISqrt5>({QISqrt5(0), QISqrt5(0), QISqrt5(1)});
  const auto s = harmonic_to_binary(f_e3);
  REQUIRE(s.degree() == 6);
  for (int j = 0; j <= 6; ++j)
    CHECK(s.u[size_t(j)] == (j == 3 ? QISqrt5(8) : QISqrt5(0)));

  // A null-axis cubic maps to an exact sixth power: with b = (1, i, 0) the
  // restriction of (x,b)^3 is (-2 z2^2)^3 = -8 z2^6.
  const Vec3<QISqrt5> b = {QISqrt5(1), QISqrt5::i(), QISqrt5(0)};
  const auto cube = linear_form(b).pow(3);
  const auto t = harmonic_to_binary(cube);
  for (int j = 0; j <= 6; ++j)
    CHECK(t.u[size_t(j)] == (j == 6 ? QISqrt5(-8) : QISqrt5(0)));

  // Full rank 2d+1 on the harmonic basis.
  const auto basis = rational_harmonic_basis(3);
  Matrix<QISqrt5> m(7, 7);
  for (size_t i = 0; i < 7; ++i) {
    const auto img = harmonic_to_binary(qi_poly(basis[i]));
    for (size_t j = 0; j < 7; ++j) m.at(i, j) = img.u[j];
  }
  CHECK(rank(std::move(m)) == 7);

  // Weight vectors map to pure coefficient slots: weight m lands in u[d+m].
  for (int d = 1; d <= 4; ++d) {
    const auto wb = weight_basis(d);
    for (int k = 0; k <= 2 * d; ++k) {
      const auto img = harmonic_to_binary(wb.v[size_t(k)]);
      for (int j = 0; j <= 2 * d; ++j)
        CHECK(is_zero(img.u[size_t(j)]) == (j != k));
    }
  }

  CHECK_THROWS_AS(harmonic_to_binary(MultiPoly<QISqrt5>(ternary_vars())),
                  std::invalid_argument);
}

TEST_CASE("binary forms pull back to harmonic forms exactly") {
  // Inverse of the axis-cubic example.
  std::vector<QISqrt5> mono(7, QISqrt5(0));
  mono[3] = QISqrt5(8);
  const auto f_e3 = axis_cubic<QISqrt5>({QISqrt5(0), QISqrt5(0), QISqrt5(1)});
  CHECK(binary_to_harmonic(BinaryForm<QISqrt5>(mono), 3) == f_e3);

  SplitMix64 rng(550123);
  for (int d : {1, 2, 3}) {
    const auto wb = weight_basis(d);
    for (int it = 0; it < 20; ++it) {
      // Round trip starting from a random binary form of degree 2d.
      std::vector<QISqrt5> u;
      for (int j = 0; j <= 2 * d; ++j)
        u.emplace_back(rng.next_rational(8, 3), rng.next_rational(8, 3));
      const BinaryForm<QISqrt5> p(u);
      if (p.is_zero_form()) continue;
      const auto f = binary_to_harmonic(p, d);
      CHECK(is_harmonic(f));
      CHECK(harmonic_to_binary(f) == p);

      // Round trip starting from a random harmonic form.
      MultiPoly<QISqrt5> g(ternary_vars());
      for (const auto& v : wb.v)
        g += v.scaled(QISqrt5(rng.next_rational(6, 3), rng.next_rational(6, 3)));
      if (g.is_zero_poly()) continue;
      CHECK(binary_to_harmonic(harmonic_to_binary(g), d) == g);
    }
  }

  // Equivariance: the pure slot u[d+m] pulls back into weight space m.
  for (int m = -3; m <= 3; ++m) {
    std::vector<QISqrt5> u(7, QISqrt5(0));
    u[size_t(3 + m)] = QISqrt5(1);
    const auto f = binary_to_harmonic(BinaryForm<QISqrt5>(u), 3);
    CHECK(weight_support(f, 3) == std::vector<int>{m});
  }

  CHECK_THROWS_AS(binary_to_harmonic(BinaryForm<QISqrt5>(mono), 2),
                  std::invalid_argument);
}

TEST_CASE("the null-conic map intertwines the sl2 actions") {
  const auto wb = weight_basis(3);
  auto to_bin = [](const MultiPoly<QISqrt5>& f) { return harmonic_to_binary(f); };

  // The Cartan actions agree on the nose.
  for (int k = 0; k <= 6; ++k)
    CHECK(to_binary_or_zero(apply_h(wb.v[size_t(k)]), 6) ==
          bin_h(to_bin(wb.v[size_t(k)])));

  // The ladder operators agree up to constants beta, gamma determined from a
  // single column; the sl2 relation forces beta * gamma = -1.
  const auto up0 = to_bin(apply_n_plus(wb.v[0]));
  const auto raised0 = bin_raise(to_bin(wb.v[0]));
  REQUIRE(!is_zero(raised0.u[1]));
  const QISqrt5 beta = up0.u[1] / raised0.u[1];

  const auto down6 = to_bin(apply_n_minus(wb.v[6]));
  const auto lowered6 = bin_lower(to_bin(wb.v[6]));
  REQUIRE(!is_zero(lowered6.u[5]));
  const QISqrt5 gamma = down6.u[5] / lowered6.u[5];

  for (int k = 0; k <= 6; ++k) {
    CHECK(to_binary_or_zero(apply_n_plus(wb.v[size_t(k)]), 6) ==
          bin_scale(bin_raise(to_bin(wb.v[size_t(k)])), beta));
    CHECK(to_binary_or_zero(apply_n_minus(wb.v[size_t(k)]), 6) ==
          bin_scale(bin_lower(to_bin(wb.v[size_t(k)])), gamma));
  }
  CHECK(beta * gamma == QISqrt5(-1));
}

TEST_CASE("standard icosahedron axis identities") {
  const auto axes = standard_icosahedron();
  const QSqrt5 phi = QSqrt5::golden();
  CHECK(axes[0] == Vec3<QSqrt5>{QSqrt5(0), QSqrt5(1), phi});

  const QSqrt5 norm = QSqrt5(2) + phi;
  for (const auto& a : axes) CHECK(dot(a, a) == norm);

  const QSqrt5 fifth(Rational(1, 5));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j) {
      const QSqrt5 d = dot(axes[i], axes[j]);
      CHECK(d * d == fifth * dot(axes[i], axes[i]) * dot(axes[j], axes[j]));
      const auto c = cross(axes[i], axes[j]);
      CHECK(!(is_zero(c[0]) && is_zero(c[1]) && is_zero(c[2])));
    }
}

TEST_CASE("icosahedral generators produce the order-60 rotation group") {
  const auto [g1, g2] = icosahedral_generators();
  const auto id = Matrix<QSqrt5>::identity(3);

  // g1 is the half-turn diag(-1,-1,1).
  CHECK(g1 == Matrix<QSqrt5>::from_rows({{QSqrt5(-1), QSqrt5(0), QSqrt5(0)},
                                         {QSqrt5(0), QSqrt5(-1), QSqrt5(0)},
                                         {QSqrt5(0), QSqrt5(0), QSqrt5(1)}}));
  CHECK(g1 * g1 == id);

  // Both are rotations: orthogonal with determinant 1.
  for (const auto& g : {g1, g2}) {
    CHECK(g.transpose() * g == id);
    CHECK(det(g) == QSqrt5(1));
  }

  // g2 has exact order 5 and fixes the first axis.
  const auto g2sq = g2 * g2;
  CHECK(g2sq * g2sq * g2 == id);
  CHECK(!(g2 == id));
  const auto axes = standard_icosahedron();
  CHECK(g2.apply({axes[0][0], axes[0][1], axes[0][2]}) ==
        std::vector<QSqrt5>{axes[0][0], axes[0][1], axes[0][2]});

  // Each generator permutes the six axes up to sign.
  CHECK(axis_permutation(g1, axes).has_value());
  CHECK(axis_permutation(g2, axes).has_value());

  // The cyclic coordinate rotation acts by the two 3-cycles (0 4 2)(1 5 3).
  const auto cyc = Matrix<QSqrt5>::from_rows({{QSqrt5(0), QSqrt5(0), QSqrt5(1)},
                                              {QSqrt5(1), QSqrt5(0), QSqrt5(0)},
                                              {QSqrt5(0), QSqrt5(1), QSqrt5(0)}});
  const auto perm = axis_permutation(cyc, axes);
  REQUIRE(perm.has_value());
  const std::vector<std::pair<size_t, int>> expected = {
      {4, 1}, {5, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}};
  CHECK(*perm == expected);

  // A matrix outside the symmetry group moves the axis set.
  const auto rot3 = Matrix<QSqrt5>::from_rows(
      {{QSqrt5(Rational(2, 3)), QSqrt5(Rational(-2, 3)), QSqrt5(Rational(1, 3))},
       {QSqrt5(Rational(2, 3)), QSqrt5(Rational(1, 3)), QSqrt5(Rational(-2, 3))},
       {QSqrt5(Rational(1, 3)), QSqrt5(Rational(2, 3)), QSqrt5(Rational(2, 3))}});
  CHECK(!axis_permutation(rot3, axes).has_value());

  // Closure enumeration: exactly 60 rotations.
  const auto group = rotation_closure({g1, g2}, 200);
  CHECK(group.size() == 60);
  CHECK_THROWS_AS(rotation_closure({g1, g2}, 30), std::runtime_error);
}

TEST_CASE("axis cubics of the icosahedron span an isotropic 3-space") {
  const auto axes = standard_icosahedron();
  const auto u = isotropic_span(axes);
  CHECK(u.d == 3);
  CHECK(u.kind == IsotropicKind::nondegenerate);
  REQUIRE(u.basis.size() == 3);
  for (const auto& f : u.basis) {
    int deg = 0;
    CHECK(f.is_homogeneous(&deg));
    CHECK(deg == 3);
    CHECK(is_harmonic(f));
  }
  CHECK(rank(coefficient_matrix(u.basis, 3)) == 3);

  // Re-verify isotropy directly over the extended field.
  for (int k = 0; k < 3; ++k) {
    Vec3<QISqrt5> e = {QISqrt5(0), QISqrt5(0), QISqrt5(0)};
    e[size_t(k)] = QISqrt5(1);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        CHECK(is_zero(skew_form(e, u.basis[i], u.basis[j])));
  }

  // Every axis cubic lies in the span.
  for (const auto& a : axes)
    CHECK(coordinates_in_span(u.basis, qi_poly5(axis_cubic(a))).has_value());

  // The icosahedral generators fix the subspace setwise.
  const auto [g1, g2] = icosahedral_generators();
  for (const auto& g : {g1, g2})
    for (const auto& f : u.basis)
      CHECK(coordinates_in_span(u.basis, rotate_form(qi_matrix(g), f)).has_value());

  // An exact rational rotation transports the whole construction.
  const Rational third(1, 3);
  const auto rot = Matrix<QSqrt5>::from_rows(
      {{QSqrt5(2 * third), QSqrt5(-2 * third), QSqrt5(third)},
       {QSqrt5(2 * third), QSqrt5(third), QSqrt5(-2 * third)},
       {QSqrt5(third), QSqrt5(2 * third), QSqrt5(2 * third)}});
  IcosahedralAxes rotated;
  for (size_t i = 0; i < 6; ++i) {
    const auto img = rot.apply({axes[i][0], axes[i][1], axes[i][2]});
    rotated[i] = {img[0], img[1], img[2]};
  }
  const auto u_rot = isotropic_span(rotated);
  for (const auto& f : u.basis)
    CHECK(coordinates_in_span(u_rot.basis, rotate_form(qi_matrix(rot), f))
              .has_value());

  // A perturbed non-icosahedral sextuple is rejected.
  IcosahedralAxes bad = axes;
  bad[5][1] += QSqrt5(1);
  CHECK_THROWS_AS(isotropic_span(bad), std::domain_error);
  IcosahedralAxes prop = axes;
  prop[1] = {axes[0][0] + axes[0][0], axes[0][1] + axes[0][1],
             axes[0][2] + axes[0][2]};
  CHECK_THROWS_AS(isotropic_span(prop), std::domain_error);
}

TEST_CASE("degenerate isotropic subspaces and their weights") {
  const Vec3<QISqrt5> a = {QISqrt5(1), QISqrt5::i(), QISqrt5(0)};
  const Vec3<QISqrt5> b = {QISqrt5(0), QISqrt5(0), QISqrt5(1)};

  const auto t1 = degenerate_subspace(IsotropicKind::type1, a, b);
  CHECK(t1.kind == IsotropicKind::type1);
  REQUIRE(t1.basis.size() == 3);
  const auto xa = linear_form(a);
  const auto xb = linear_form(b);
  CHECK(t1.basis[0] == axis_cubic(b));
  CHECK(t1.basis[1] == xa * xa * xb);
  CHECK(t1.basis[2] == xa.pow(3));
  CHECK(weight_support(t1.basis[0], 3) == std::vector<int>{0});
  CHECK(weight_support(t1.basis[1], 3) == std::vector<int>{2});
  CHECK(weight_support(t1.basis[2], 3) == std::vector<int>{3});

  const auto t2 = degenerate_subspace(IsotropicKind::type2, a, b);
  REQUIRE(t2.basis.size() == 3);
  const auto quad =
      xb * xb - quadric_norm<QISqrt5>().scaled(dot(b, b) * QISqrt5(Rational(1, 5)));
  CHECK(t2.basis[0] == xa * quad);
  CHECK(weight_support(t2.basis[0], 3) == std::vector<int>{1});
  CHECK(weight_support(t2.basis[1], 3) == std::vector<int>{2});
  CHECK(weight_support(t2.basis[2], 3) == std::vector<int>{3});

  // Another valid (a, b) pair: a = (0, 1, i) null, b = e1.
  const Vec3<QISqrt5> a2 = {QISqrt5(0), QISqrt5(1), QISqrt5::i()};
  const Vec3<QISqrt5> b2 = {QISqrt5(1), QISqrt5(0), QISqrt5(0)};
  CHECK(degenerate_subspace(IsotropicKind::type1, a2, b2).basis.size() == 3);
  CHECK(degenerate_subspace(IsotropicKind::type2, a2, b2).basis.size() == 3);

  // Precondition violations.
  CHECK_THROWS_AS(degenerate_subspace(IsotropicKind::type1, b, a),
                  std::invalid_argument);  // b is not null
  const Vec3<QISqrt5> not_orth = {QISqrt5(1), QISqrt5(0), QISqrt5(0)};
  CHECK_THROWS_AS(degenerate_subspace(IsotropicKind::type1, a, not_orth),
                  std::invalid_argument);  // (a, b) != 0
  CHECK_THROWS_AS(degenerate_subspace(IsotropicKind::type1, a, a),
                  std::invalid_argument);  // null b for type 1
  CHECK_THROWS_AS(degenerate_subspace(IsotropicKind::nondegenerate, a, b),
                  std::invalid_argument);
}

TEST_CASE("coalescence expansion of the axis cubic family") {
  const Vec3<QISqrt5> a = {QISqrt5(1), QISqrt5::i(), QISqrt5(0)};
  const Vec3<QISqrt5> b = {QISqrt5(0), QISqrt5(0), QISqrt5(1)};
  CHECK(coalescence_identity_holds(a, b));
  const Vec3<QISqrt5> b_scaled = {QISqrt5(0), QISqrt5(0), QISqrt5(Rational(5, 2))};
  CHECK(coalescence_identity_holds(a, b_scaled));

  SplitMix64 rng(31337);
  for (int it = 0; it < 5; ++it) {
    // b = (b1, i b1, b3) stays orthogonal to a = (1, i, 0).
    const QISqrt5 b1(rng.next_rational(5, 3));
    const Vec3<QISqrt5> br = {b1, b1 * QISqrt5::i(), QISqrt5(rng.next_rational(5, 3))};
    CHECK(coalescence_identity_holds(a, br));
  }

  CHECK_THROWS_AS(coalescence_identity_holds(b, a), std::invalid_argument);
  const Vec3<QISqrt5> not_orth = {QISqrt5(1), QISqrt5(0), QISqrt5(0)};
  CHECK_THROWS_AS(coalescence_identity_holds(a, not_orth), std::invalid_argument);

  // The t^2 coefficient of f_{a+tb} is 3x the type-2 leading basis vector.
  const std::vector<std::string> txv = {"t", "x1", "x2", "x3"};
  auto lift = [&txv](const Vec3<QISqrt5>& v) {
    MultiPoly<QISqrt5> p(txv);
    p.add_term({0, 1, 0, 0}, v[0]);
    p.add_term({0, 0, 1, 0}, v[1]);
    p.add_term({0, 0, 0, 1}, v[2]);
    return p;
  };
  MultiPoly<QISqrt5> xx4(txv);
  xx4.add_term({0, 2, 0, 0}, QISqrt5(1));
  xx4.add_term({0, 0, 2, 0}, QISqrt5(1));
  xx4.add_term({0, 0, 0, 2}, QISqrt5(1));
  const auto t = MultiPoly<QISqrt5>::variable(txv, 0);
  const auto lc = lift(a) + lift(b) * t;
  const QISqrt5 bb = dot(b, b);
  const auto family =
      lc.pow(3) - (lc * xx4 * t.pow(2)).scaled(bb * QISqrt5(Rational(3, 5)));
  MultiPoly<QISqrt5> t2_slice(ternary_vars());
  for (const auto& [e, c] : family.terms())
    if (e[0] == 2) t2_slice.add_term({e[1], e[2], e[3]}, c);
  const auto t2 = degenerate_subspace(IsotropicKind::type2, a, b);
  CHECK(t2_slice == t2.basis[0].scaled(QISqrt5(3)));
}

TEST_CASE("isotropic weight subsets form the two sign families") {
  using VV = std::vector<std::vector<int>>;
  CHECK(isotropic_weight_subsets(1) == VV{{-1}, {0}, {1}});
  CHECK(isotropic_weight_subsets(2) == VV{{-2, -1}, {-2, 0}, {0, 2}, {1, 2}});
  CHECK(isotropic_weight_subsets(3) ==
        VV{{-3, -2, -1}, {-3, -2, 0}, {0, 2, 3}, {1, 2, 3}});
  for (int d : {4, 5}) {
    const auto subsets = isotropic_weight_subsets(d);
    REQUIRE(subsets.size() == 4);
    std::vector<int> plus, plus0;
    for (int m = 1; m <= d; ++m) plus.push_back(m);
    plus0.push_back(0);
    for (int m = 2; m <= d; ++m) plus0.push_back(m);
    std::vector<int> minus, minus0;
    for (int m = d; m >= 1; --m) minus.push_back(-m);
    for (int m = d; m >= 2; --m) minus0.push_back(-m);
    minus0.push_back(0);
    const VV expected = {minus, minus0, plus0, plus};
    CHECK(subsets == expected);
  }
}
