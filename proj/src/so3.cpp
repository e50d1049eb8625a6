#include "icosa/so3.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace icosa {

namespace {

Vec3<QISqrt5> qi_axis(int k) {
  Vec3<QISqrt5> e = {QISqrt5(0), QISqrt5(0), QISqrt5(0)};
  e[k] = QISqrt5(1);
  return e;
}

// Lifts of the ternary building blocks into the 4-variable ring (t,x1,x2,x3)
// used by the coalescence identity.
const std::vector<std::string>& tx_vars() {
  static const std::vector<std::string> v = {"t", "x1", "x2", "x3"};
  return v;
}

MultiPoly<QISqrt5> tx_linear(const Vec3<QISqrt5>& a) {
  MultiPoly<QISqrt5> p(tx_vars());
  p.add_term({0, 1, 0, 0}, a[0]);
  p.add_term({0, 0, 1, 0}, a[1]);
  p.add_term({0, 0, 0, 1}, a[2]);
  return p;
}

MultiPoly<QISqrt5> tx_quadric() {
  MultiPoly<QISqrt5> p(tx_vars());
  p.add_term({0, 2, 0, 0}, QISqrt5(1));
  p.add_term({0, 0, 2, 0}, QISqrt5(1));
  p.add_term({0, 0, 0, 2}, QISqrt5(1));
  return p;
}

}  // namespace

std::vector<std::vector<int>> degree_monomials(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<std::vector<int>> out;
  for (int e1 = d; e1 >= 0; --e1)
    for (int e2 = d - e1; e2 >= 0; --e2) out.push_back({e1, e2, d - e1 - e2});
  return out;
}

std::vector<MultiPoly<Rational>> rational_harmonic_basis(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("degree outside [1, 8]");
  const auto mons = degree_monomials(d);
  const auto low =
      d >= 2 ? degree_monomials(d - 2) : std::vector<std::vector<int>>{};
  std::map<std::vector<int>, size_t> row_of;
  for (size_t r = 0; r < low.size(); ++r) row_of[low[r]] = r;
  Matrix<Rational> lap_matrix(low.size(), mons.size());
  for (size_t j = 0; j < mons.size(); ++j) {
    const auto mono =
        MultiPoly<Rational>::monomial(ternary_vars(), mons[j], Rational(1));
    const auto lap = laplacian(mono);  // keep alive while iterating terms()
    for (const auto& [e, c] : lap.terms())
      lap_matrix.at(row_of.at(e), j) = c;
  }
  std::vector<MultiPoly<Rational>> out;
  for (const auto& k : kernel_basis(lap_matrix)) {
    MultiPoly<Rational> p(ternary_vars());
    for (size_t j = 0; j < mons.size(); ++j)
      if (!is_zero(k[j])) p.add_term(mons[j], k[j]);
    out.push_back(std::move(p));
  }
  if (out.size() != size_t(2 * d + 1))
    throw std::logic_error("harmonic kernel has unexpected dimension");
  return out;
}

MultiPoly<QISqrt5> apply_h(const MultiPoly<QISqrt5>& p) {
  return lie_action(qi_axis(2), p).scaled(QISqrt5::i());
}

MultiPoly<QISqrt5> apply_n_plus(const MultiPoly<QISqrt5>& p) {
  return lie_action(qi_axis(0), p) + lie_action(qi_axis(1), p).scaled(QISqrt5::i());
}

MultiPoly<QISqrt5> apply_n_minus(const MultiPoly<QISqrt5>& p) {
  return lie_action(qi_axis(0), p) - lie_action(qi_axis(1), p).scaled(QISqrt5::i());
}

WeightBasis weight_basis(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("degree outside [1, 8]");
  const int n = 2 * d + 1;
  MultiPoly<QISqrt5> top(ternary_vars());
  top.add_term({1, 0, 0}, QISqrt5(1));
  top.add_term({0, 1, 0}, QISqrt5::i());
  std::vector<MultiPoly<QISqrt5>> desc;  // weights d, d-1, ..., -d
  desc.push_back(top.pow(unsigned(d)));
  for (int k = 1; k < n; ++k) desc.push_back(apply_n_minus(desc.back()));
  for (const auto& v : desc)
    if (v.is_zero_poly()) throw std::logic_error("weight vector vanished");

  WeightBasis wb;
  wb.d = d;
  wb.v.assign(desc.rbegin(), desc.rend());

  auto coord_matrix = [&](auto&& op) {
    Matrix<QISqrt5> m(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      const auto coords = coordinates_in_span(wb.v, op(wb.v[size_t(k)]));
      if (!coords) throw std::logic_error("operator image escaped the basis");
      for (int r = 0; r < n; ++r) m.at(size_t(r), size_t(k)) = (*coords)[size_t(r)];
    }
    return m;
  };
  wb.h = coord_matrix([](const MultiPoly<QISqrt5>& p) { return apply_h(p); });
  wb.n_plus = coord_matrix([](const MultiPoly<QISqrt5>& p) { return apply_n_plus(p); });
  wb.n_minus = coord_matrix([](const MultiPoly<QISqrt5>& p) { return apply_n_minus(p); });

  wb.gram = Matrix<QISqrt5>(size_t(n), size_t(n));
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      const QISqrt5 val = bombieri_pairing(wb.v[size_t(j)], wb.v[size_t(k)]);
      wb.gram.at(size_t(j), size_t(k)) = val;
      wb.gram.at(size_t(k), size_t(j)) = val;
    }
  return wb;
}

std::vector<int> weight_support(const MultiPoly<QISqrt5>& f, int d) {
  const WeightBasis wb = weight_basis(d);
  const auto coords = coordinates_in_span(wb.v, f);
  if (!coords)
    throw std::invalid_argument("form is not in the degree-d harmonic space");
  std::vector<int> out;
  for (int k = 0; k < 2 * d + 1; ++k)
    if (!is_zero((*coords)[size_t(k)])) out.push_back(k - d);
  return out;
}

MultiPoly<QISqrt5> binary_to_harmonic(const BinaryForm<QISqrt5>& p, int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("degree outside [1, 8]");
  if (p.degree() != 2 * d)
    throw std::invalid_argument("binary form degree is not 2d");
  const WeightBasis wb = weight_basis(d);
  const size_t n = size_t(2 * d + 1);
  Matrix<QISqrt5> m(n, n);
  for (size_t k = 0; k < n; ++k) {
    const BinaryForm<QISqrt5> img = harmonic_to_binary(wb.v[k]);
    for (size_t j = 0; j < n; ++j) m.at(j, k) = img.u[j];
  }
  const auto coords = solve_linear(m, p.u);
  if (!coords) throw std::logic_error("harmonic-to-binary map is singular");
  MultiPoly<QISqrt5> out(ternary_vars());
  for (size_t k = 0; k < n; ++k) out += wb.v[k].scaled((*coords)[k]);
  return out;
}

IcosahedralAxes standard_icosahedron() {
  const QSqrt5 phi = QSqrt5::golden();
  const QSqrt5 one(1), zero(0);
  return {Vec3<QSqrt5>{zero, one, phi},  Vec3<QSqrt5>{zero, -one, phi},
          Vec3<QSqrt5>{one, phi, zero},  Vec3<QSqrt5>{-one, phi, zero},
          Vec3<QSqrt5>{phi, zero, one},  Vec3<QSqrt5>{phi, zero, -one}};
}

std::pair<Matrix<QSqrt5>, Matrix<QSqrt5>> icosahedral_generators() {
  const QSqrt5 one(1), zero(0);
  const Matrix<QSqrt5> half_turn = Matrix<QSqrt5>::from_rows(
      {{-one, zero, zero}, {zero, -one, zero}, {zero, zero, one}});

  // Rotation by 72 degrees about a1 = (0, 1, phi):
  //   R = cos72 I + (sin72/|a|) K + ((1-cos72)/|a|^2) a a^T
  // with cos72 = (sqrt5-1)/4, sin72/|a| = 1/2, (1-cos72)/|a|^2 = (3-sqrt5)/4,
  // so every entry lies in Q(sqrt5). K is the cross-product matrix of a.
  const QSqrt5 phi = QSqrt5::golden();
  const QSqrt5 c(Rational(-1, 4), Rational(1, 4));   // cos 72
  const QSqrt5 s(Rational(3, 4), Rational(-1, 4));   // (1 - cos 72)/|a|^2
  const QSqrt5 hlf(Rational(1, 2));                  // sin 72 / |a|
  const Vec3<QSqrt5> a = {zero, one, phi};
  Matrix<QSqrt5> r(3, 3);
  const Matrix<QSqrt5> k = Matrix<QSqrt5>::from_rows(
      {{zero, -a[2], a[1]}, {a[2], zero, -a[0]}, {-a[1], a[0], zero}});
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      QSqrt5 v = k.at(i, j) * hlf + a[i] * a[j] * s;
      if (i == j) v += c;
      r.at(i, j) = v;
    }
  return {half_turn, r};
}

std::vector<Matrix<QSqrt5>> rotation_closure(
    const std::vector<Matrix<QSqrt5>>& generators, size_t cap) {
  std::vector<Matrix<QSqrt5>> elems = {Matrix<QSqrt5>::identity(3)};
  std::vector<size_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t idx : frontier)
      for (const auto& g : generators) {
        Matrix<QSqrt5> prod = g * elems[idx];
        if (std::find(elems.begin(), elems.end(), prod) != elems.end()) continue;
        elems.push_back(std::move(prod));
        if (elems.size() > cap)
          throw std::runtime_error("group closure exceeded the element cap");
        next.push_back(elems.size() - 1);
      }
    frontier = std::move(next);
  }
  return elems;
}

std::optional<std::vector<std::pair<size_t, int>>> axis_permutation(
    const Matrix<QSqrt5>& g, const IcosahedralAxes& axes) {
  std::vector<std::pair<size_t, int>> out;
  std::vector<bool> used(axes.size(), false);
  for (const auto& a : axes) {
    const std::vector<QSqrt5> img = g.apply({a[0], a[1], a[2]});
    bool found = false;
    for (size_t j = 0; j < axes.size() && !found; ++j) {
      if (used[j]) continue;
      const auto& b = axes[j];
      if (img[0] == b[0] && img[1] == b[1] && img[2] == b[2]) {
        out.emplace_back(j, 1);
        used[j] = found = true;
      } else if (img[0] == -b[0] && img[1] == -b[1] && img[2] == -b[2]) {
        out.emplace_back(j, -1);
        used[j] = found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

IsotropicSubspace isotropic_span(const IcosahedralAxes& axes) {
  for (size_t i = 0; i < axes.size(); ++i)
    for (size_t j = i + 1; j < axes.size(); ++j) {
      const Vec3<QSqrt5> c = cross(axes[i], axes[j]);
      if (is_zero(c[0]) && is_zero(c[1]) && is_zero(c[2]))
        throw std::domain_error("two axes are proportional");
    }

  std::vector<MultiPoly<QSqrt5>> cubics;
  for (const auto& a : axes) cubics.push_back(axis_cubic(a));

  // Exact isotropy certificate for the three coordinate skew forms.
  for (int k = 0; k < 3; ++k) {
    Vec3<QSqrt5> e = {QSqrt5(0), QSqrt5(0), QSqrt5(0)};
    e[size_t(k)] = QSqrt5(1);
    for (size_t i = 0; i < cubics.size(); ++i)
      for (size_t j = i + 1; j < cubics.size(); ++j)
        if (!is_zero(skew_form(e, cubics[i], cubics[j])))
          throw std::domain_error("axis cubics are not isotropic");
  }

  // Exact dimension via row reduction of the coefficient matrix.
  const auto mons = degree_monomials(3);
  Matrix<QSqrt5> m(cubics.size(), mons.size());
  for (size_t i = 0; i < cubics.size(); ++i)
    for (size_t j = 0; j < mons.size(); ++j)
      m.at(i, j) = cubics[i].coefficient(mons[j]);
  const auto pivots = rref_in_place(m);
  if (pivots.size() != 3)
    throw std::domain_error("axis cubics do not span a 3-dimensional space");

  IsotropicSubspace out;
  out.d = 3;
  out.kind = IsotropicKind::nondegenerate;
  for (size_t r = 0; r < 3; ++r) {
    MultiPoly<QISqrt5> p(ternary_vars());
    for (size_t j = 0; j < mons.size(); ++j)
      if (!is_zero(m.at(r, j))) p.add_term(mons[j], QISqrt5(m.at(r, j)));
    out.basis.push_back(std::move(p));
  }
  return out;
}

IsotropicSubspace degenerate_subspace(IsotropicKind kind, const Vec3<QISqrt5>& a,
                                      const Vec3<QISqrt5>& b) {
  if (kind != IsotropicKind::type1 && kind != IsotropicKind::type2)
    throw std::invalid_argument("kind must be type1 or type2");
  if (!is_zero(dot(a, a))) throw std::invalid_argument("axis a must be null");
  if (!is_zero(dot(a, b))) throw std::invalid_argument("a and b must be orthogonal");
  if (kind == IsotropicKind::type1 && is_zero(dot(b, b)))
    throw std::invalid_argument("axis b must be non-null for type 1");

  const auto xa = linear_form(a);
  const auto xb = linear_form(b);
  const auto xx = quadric_norm<QISqrt5>();
  const QISqrt5 bb = dot(b, b);

  IsotropicSubspace out;
  out.d = 3;
  out.kind = kind;
  if (kind == IsotropicKind::type1) {
    out.basis = {axis_cubic(b), xa * xa * xb, xa.pow(3)};
  } else {
    const auto quad = xb * xb - xx.scaled(bb * QISqrt5(Rational(1, 5)));
    out.basis = {xa * quad, xa * xa * xb, xa.pow(3)};
  }

  const auto mons = degree_monomials(3);
  Matrix<QISqrt5> m(out.basis.size(), mons.size());
  for (size_t i = 0; i < out.basis.size(); ++i)
    for (size_t j = 0; j < mons.size(); ++j)
      m.at(i, j) = out.basis[i].coefficient(mons[j]);
  if (rank(std::move(m)) != 3)
    throw std::domain_error("degenerate basis is not 3-dimensional");

  for (int k = 0; k < 3; ++k) {
    const Vec3<QISqrt5> e = qi_axis(k);
    for (size_t i = 0; i < out.basis.size(); ++i)
      for (size_t j = i + 1; j < out.basis.size(); ++j)
        if (!is_zero(skew_form(e, out.basis[i], out.basis[j])))
          throw std::logic_error("degenerate basis failed the isotropy certificate");
  }
  return out;
}

bool coalescence_identity_holds(const Vec3<QISqrt5>& a, const Vec3<QISqrt5>& b) {
  if (!is_zero(dot(a, a))) throw std::invalid_argument("axis a must be null");
  if (!is_zero(dot(a, b))) throw std::invalid_argument("a and b must be orthogonal");

  const auto la = tx_linear(a);
  const auto lb = tx_linear(b);
  const auto xx = tx_quadric();
  const auto t = MultiPoly<QISqrt5>::variable(tx_vars(), 0);
  const QISqrt5 bb = dot(b, b);
  const QISqrt5 k35 = QISqrt5(Rational(3, 5));
  const QISqrt5 k15 = QISqrt5(Rational(1, 5));

  // f_c for c = a + t b: (c,c) = t^2 (b,b) once (a,a) = (a,b) = 0.
  const auto lc = la + lb * t;
  const auto lhs = lc.pow(3) - (lc * xx * t.pow(2)).scaled(bb * k35);

  const auto fb = lb.pow(3) - (lb * xx).scaled(bb * k35);
  const auto rhs = la.pow(3) + (la * la * lb * t).scaled(QISqrt5(3)) +
                   (la * (lb * lb - xx.scaled(bb * k15)) * t.pow(2)).scaled(QISqrt5(3)) +
                   fb * t.pow(3);
  return lhs == rhs;
}

std::vector<std::vector<int>> isotropic_weight_subsets(int d) {
  const WeightBasis wb = weight_basis(d);
  const size_t n = size_t(2 * d + 1);
  const std::vector<Matrix<QISqrt5>> omegas = {wb.h.transpose() * wb.gram,
                                               wb.n_plus.transpose() * wb.gram,
                                               wb.n_minus.transpose() * wb.gram};
  std::vector<std::vector<bool>> coupled(n, std::vector<bool>(n, false));
  for (const auto& om : omegas)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (!is_zero(om.at(j, k))) coupled[j][k] = true;

  std::vector<std::vector<int>> out;
  std::vector<size_t> idx(static_cast<size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (size_t p = 0; p < idx.size() && ok; ++p)
      for (size_t q = 0; q < idx.size() && ok; ++q)
        if (coupled[idx[p]][idx[q]]) ok = false;
    if (ok) {
      std::vector<int> weights;
      for (size_t k : idx) weights.push_back(int(k) - d);
      out.push_back(std::move(weights));
    }
    // Next combination in lexicographic order.
    int pos = d - 1;
    while (pos >= 0 && idx[size_t(pos)] == n - size_t(d - pos)) --pos;
    if (pos < 0) break;
    ++idx[size_t(pos)];
    for (size_t t = size_t(pos) + 1; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace icosa
