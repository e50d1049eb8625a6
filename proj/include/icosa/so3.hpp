#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "icosa/bigfloat.hpp"
#include "icosa/binary_form.hpp"
#include "icosa/fields.hpp"
#include "icosa/linalg.hpp"
#include "icosa/multipoly.hpp"

// The (2d+1)-dimensional irreducible representation of SO(3,C), realized both
// as harmonic ternary forms of degree d in (x1,x2,x3) and as binary forms of
// degree 2d in (z1,z2), together with the invariant pairing, the infinitesimal
// rotation action, icosahedral and degenerate isotropic subspaces, and the
// classification of isotropic sums of weight spaces.

namespace icosa {

template <class S>
using Vec3 = std::array<S, 3>;

inline const std::vector<std::string>& ternary_vars() {
  static const std::vector<std::string> v = {"x1", "x2", "x3"};
  return v;
}

// Embeddings of Q and of the imaginary unit into the scalar types that the
// templates below are instantiated with.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
};
template <>
struct ScalarTraits<QSqrt5> {
  static QSqrt5 from_rational(const Rational& q) { return QSqrt5(q); }
};
template <>
struct ScalarTraits<QISqrt5> {
  static QISqrt5 from_rational(const Rational& q) { return QISqrt5(q); }
  static QISqrt5 imaginary_unit() { return QISqrt5::i(); }
};
template <>
struct ScalarTraits<std::complex<double>> {
  static std::complex<double> from_rational(const Rational& q) {
    return {to_double(q), 0.0};
  }
  static std::complex<double> imaginary_unit() { return {0.0, 1.0}; }
};
template <>
struct ScalarTraits<BigComplex> {
  // 0 and 1 are exact at any precision; arithmetic promotes to the widest
  // operand, so the 53-bit unit never truncates a wider computation.
  static BigComplex imaginary_unit() {
    return BigComplex(BigFloat(0), BigFloat(1));
  }
};

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// The linear form (x, a) = a1 x1 + a2 x2 + a3 x3.
template <class S>
MultiPoly<S> linear_form(const Vec3<S>& a) {
  MultiPoly<S> p(ternary_vars());
  p.add_term({1, 0, 0}, a[0]);
  p.add_term({0, 1, 0}, a[1]);
  p.add_term({0, 0, 1}, a[2]);
  return p;
}

// The invariant quadric (x, x) = x1^2 + x2^2 + x3^2.
template <class S>
MultiPoly<S> quadric_norm() {
  MultiPoly<S> p(ternary_vars());
  p.add_term({2, 0, 0}, S(1));
  p.add_term({0, 2, 0}, S(1));
  p.add_term({0, 0, 2}, S(1));
  return p;
}

template <class S>
MultiPoly<S> laplacian(const MultiPoly<S>& p) {
  if (p.vars() != ternary_vars())
    throw std::invalid_argument("laplacian expects a polynomial in x1, x2, x3");
  MultiPoly<S> out(ternary_vars());
  for (size_t k = 0; k < 3; ++k) out += p.derivative(k).derivative(k);
  return out;
}

template <class S>
bool is_harmonic(const MultiPoly<S>& p) {
  return laplacian(p).is_zero_poly();
}

// Infinitesimal rotation action (u.f)(x) = d/dt|_0 f(exp(-tu) x) with u acting
// through the cross product; concretely (u.f)(x) = ((x cross u) . grad f)(x).
// u |-> (f |-> u.f) is a Lie algebra homomorphism for [u,v] = u cross v.
template <class S>
MultiPoly<S> lie_action(const Vec3<S>& u, const MultiPoly<S>& p) {
  if (p.vars() != ternary_vars())
    throw std::invalid_argument("lie_action expects a polynomial in x1, x2, x3");
  const auto x1 = MultiPoly<S>::variable(ternary_vars(), 0);
  const auto x2 = MultiPoly<S>::variable(ternary_vars(), 1);
  const auto x3 = MultiPoly<S>::variable(ternary_vars(), 2);
  // x cross u, componentwise as linear forms.
  const MultiPoly<S> c1 = x2.scaled(u[2]) - x3.scaled(u[1]);
  const MultiPoly<S> c2 = x3.scaled(u[0]) - x1.scaled(u[2]);
  const MultiPoly<S> c3 = x1.scaled(u[1]) - x2.scaled(u[0]);
  return c1 * p.derivative(0) + c2 * p.derivative(1) + c3 * p.derivative(2);
}

// Invariant (Bombieri/apolarity) pairing (f, g) = sum_alpha (alpha!/d!)
// f_alpha g_alpha on homogeneous forms of equal degree d. Normalized so that
// (f, (x,a)^d) = f(a).
template <class S>
S bombieri_pairing(const MultiPoly<S>& f, const MultiPoly<S>& g) {
  if (f.vars() != ternary_vars() || g.vars() != ternary_vars())
    throw std::invalid_argument("pairing expects polynomials in x1, x2, x3");
  int df = 0, dg = 0;
  if (!f.is_homogeneous(&df) || !g.is_homogeneous(&dg))
    throw std::invalid_argument("pairing of non-homogeneous polynomials");
  if (f.is_zero_poly() || g.is_zero_poly()) return S(0);
  if (df != dg) throw std::invalid_argument("pairing degree mismatch");
  const Rational dfact(factorial(unsigned(df)));
  S out(0);
  for (const auto& [e, cf] : f.terms()) {
    const S cg = g.coefficient(e);
    if (is_zero(cg)) continue;
    const Rational w =
        Rational(factorial(unsigned(e[0])) * factorial(unsigned(e[1])) *
                 factorial(unsigned(e[2]))) /
        dfact;
    out = out + cf * cg * ScalarTraits<S>::from_rational(w);
  }
  return out;
}

// The skew form omega_x(u, v) = (x.u, v) on forms of equal degree.
template <class S>
S skew_form(const Vec3<S>& x, const MultiPoly<S>& u, const MultiPoly<S>& v) {
  return bombieri_pairing(lie_action(x, u), v);
}

// The harmonic cubic f_a = (x,a)^3 - (3/5)(a,a)(x,a)(x,x) attached to an axis.
template <class S>
MultiPoly<S> axis_cubic(const Vec3<S>& a) {
  const MultiPoly<S> xa = linear_form(a);
  const S aa = dot(a, a);
  const S k = aa * ScalarTraits<S>::from_rational(Rational(3, 5));
  return xa.pow(3) - (xa * quadric_norm<S>()).scaled(k);
}

// Null-conic parametrization a(z1,z2) = (z1^2 - z2^2, i(z1^2 + z2^2), 2 z1 z2),
// satisfying (a(z), a(z)) = 0 identically.
template <class S>
std::array<MultiPoly<S>, 3> null_param() {
  const S i = ScalarTraits<S>::imaginary_unit();
  const auto z1 = MultiPoly<S>::variable(binary_vars(), 0);
  const auto z2 = MultiPoly<S>::variable(binary_vars(), 1);
  const auto z1s = z1 * z1, z2s = z2 * z2;
  return {z1s - z2s, (z1s + z2s).scaled(i), (z1 * z2).scaled(S(2))};
}

// f(a(z1,z2)): the linear isomorphism from degree-d harmonic ternary forms to
// binary forms of degree 2d.
template <class S>
BinaryForm<S> harmonic_to_binary(const MultiPoly<S>& f) {
  int d = 0;
  if (!f.is_homogeneous(&d) || f.is_zero_poly())
    throw std::invalid_argument("expected a nonzero homogeneous form");
  const auto a = null_param<S>();
  return poly_to_binary(f.substitute({a[0], a[1], a[2]}), 2 * d);
}

// Substitution x_k -> sum_l m(k,l) x_l. For a rotation g acting on forms by
// (g.f)(x) = f(g^{-1} x), pass m = g^T (the inverse of an orthogonal matrix).
template <class S>
MultiPoly<S> substitute_linear(const MultiPoly<S>& p, const Matrix<S>& m) {
  const size_t n = p.nvars();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("substitution matrix shape mismatch");
  std::vector<MultiPoly<S>> images;
  images.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    MultiPoly<S> img(p.vars());
    for (size_t l = 0; l < n; ++l) {
      std::vector<int> e(n, 0);
      e[int(l)] = 1;
      img.add_term(std::move(e), m.at(k, l));
    }
    images.push_back(std::move(img));
  }
  return p.substitute(images);
}

template <class S>
MultiPoly<S> rotate_form(const Matrix<S>& g, const MultiPoly<S>& p) {
  return substitute_linear(p, g.transpose());
}

// One solution of sum_j c_j basis_j = p, or nullopt if p is outside the span.
template <class S>
std::optional<std::vector<S>> coordinates_in_span(
    const std::vector<MultiPoly<S>>& basis, const MultiPoly<S>& p) {
  // Collect the union of monomials appearing anywhere.
  std::map<std::vector<int>, size_t> rows;
  auto note = [&rows](const MultiPoly<S>& q) {
    for (const auto& [e, c] : q.terms())
      if (!rows.count(e)) rows.emplace(e, rows.size());
  };
  for (const auto& b : basis) note(b);
  note(p);
  Matrix<S> aug(rows.size(), basis.size() + 1);
  for (size_t j = 0; j < basis.size(); ++j)
    for (const auto& [e, c] : basis[j].terms()) aug.at(rows[e], j) = c;
  for (const auto& [e, c] : p.terms()) aug.at(rows[e], basis.size()) = c;
  const std::vector<size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
  std::vector<S> coords(basis.size(), S(0));
  for (size_t r = 0; r < pivots.size(); ++r)
    coords[pivots[r]] = aug.at(r, basis.size());
  return coords;
}

// ---------------------------------------------------------------------------
// Concrete objects (implemented in so3.cpp).

// All exponent vectors of total degree d over (x1,x2,x3), lexicographically
// descending; this fixes coefficient order everywhere (documents, bases).
std::vector<std::vector<int>> degree_monomials(int d);

// Deterministic basis of the 2d+1 harmonic degree-d forms over Q: the kernel
// of the Laplacian on the monomial space, 1 <= d <= 8.
std::vector<MultiPoly<Rational>> rational_harmonic_basis(int d);

// Weight basis v_{-d}..v_d over Q(i, sqrt5): v_d = (x1 + i x2)^d, then
// unnormalized lowering v_{m-1} = n^- v_m. Matrices act on coordinates in
// this basis (columns are images); gram is the invariant pairing.
struct WeightBasis {
  int d;
  std::vector<MultiPoly<QISqrt5>> v;  // v[k] has weight m = k - d
  Matrix<QISqrt5> h, n_plus, n_minus, gram;
};
WeightBasis weight_basis(int d);

// Applications of the Cartan/ladder operators to a single form.
MultiPoly<QISqrt5> apply_h(const MultiPoly<QISqrt5>& p);
MultiPoly<QISqrt5> apply_n_plus(const MultiPoly<QISqrt5>& p);
MultiPoly<QISqrt5> apply_n_minus(const MultiPoly<QISqrt5>& p);

// Weights m with nonzero component when f is written in weight_basis(d).
std::vector<int> weight_support(const MultiPoly<QISqrt5>& f, int d);

// Exact inverse of harmonic_to_binary on binary forms of degree 2d: the unique
// harmonic degree-d form f with f(a(z)) = p. 1 <= d <= 8.
MultiPoly<QISqrt5> binary_to_harmonic(const BinaryForm<QISqrt5>& p, int d);

using IcosahedralAxes = std::array<Vec3<QSqrt5>, 6>;

// The six vertex axes (0,1,phi), (0,-1,phi), (1,phi,0), (-1,phi,0),
// (phi,0,1), (phi,0,-1) with phi the golden ratio.
IcosahedralAxes standard_icosahedron();

// A half-turn diag(-1,-1,1) and an order-5 rotation about the first axis;
// together they generate the order-60 rotation group of the icosahedron.
std::pair<Matrix<QSqrt5>, Matrix<QSqrt5>> icosahedral_generators();

// Closure of a generating set under multiplication; throws if the closure
// exceeds cap elements.
std::vector<Matrix<QSqrt5>> rotation_closure(
    const std::vector<Matrix<QSqrt5>>& generators, size_t cap);

// If g maps each axis to (sign) * axes[perm[i]], returns the pairs
// (perm[i], sign); nullopt if g does not preserve the axis set.
std::optional<std::vector<std::pair<size_t, int>>> axis_permutation(
    const Matrix<QSqrt5>& g, const IcosahedralAxes& axes);

enum class IsotropicKind { nondegenerate, type1, type2, weight_family };

struct IsotropicSubspace {
  int d;
  IsotropicKind kind;
  std::vector<MultiPoly<QISqrt5>> basis;
};

// The span of the six axis cubics f_{a_i}: exactly 3-dimensional, isotropic
// for the coordinate skew forms. Throws domain_error if the axes fail either
// certificate (non-icosahedral input).
IsotropicSubspace isotropic_span(const IcosahedralAxes& axes);

// Degenerate isotropic subspaces attached to a null axis a and an orthogonal
// axis b: type1 spans weights {0,2,3}, type2 spans weights {1,2,3} (weights
// taken with respect to the b-aligned Cartan when b = e3, a = (1,i,0)).
IsotropicSubspace degenerate_subspace(IsotropicKind kind, const Vec3<QISqrt5>& a,
                                      const Vec3<QISqrt5>& b);

// Checks the exact expansion of f_{a+tb} in powers of t for null a and
// orthogonal b:
//   f_{a+tb} = (a,x)^3 + 3t (a,x)^2 (b,x)
//            + 3t^2 (a,x)[(b,x)^2 - (1/5)(b,b)(x,x)] + t^3 f_b.
bool coalescence_identity_holds(const Vec3<QISqrt5>& a, const Vec3<QISqrt5>& b);

// All d-element subsets of the weights {-d..d} whose weight-space sum is
// isotropic for every skew form; each subset sorted ascending, the list
// sorted lexicographically.
std::vector<std::vector<int>> isotropic_weight_subsets(int d);

}  // namespace icosa
