#pragma once

#include <stdexcept>
#include <vector>

#include "icosa/linalg.hpp"
#include "icosa/multipoly.hpp"

namespace icosa {

inline std::vector<std::string> binary_vars() { return {"z1", "z2"}; }

// Binary form of formal degree u.size()-1: sum_k u[k] z1^(deg-k) z2^k.
// Leading coefficients may vanish (roots at infinity).
template <class S>
struct BinaryForm {
  std::vector<S> u;

  BinaryForm() = default;
  explicit BinaryForm(std::vector<S> coeffs) : u(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(u.size()) - 1; }
  bool is_zero_form() const {
    for (const S& c : u)
      if (!is_zero(c)) return false;
    return true;
  }
  S evaluate(const S& z1, const S& z2) const {
    S out(0);
    std::vector<S> pow1(u.size(), S(1));
    for (size_t k = 1; k < u.size(); ++k) pow1[k] = pow1[k - 1] * z1;
    S p2(1);
    for (size_t k = 0; k < u.size(); ++k) {
      out = out + u[k] * pow1[u.size() - 1 - k] * p2;
      p2 = p2 * z2;
    }
    return out;
  }
  bool operator==(const BinaryForm&) const = default;
};

template <class S>
BinaryForm<S> bf_derivative_z1(const BinaryForm<S>& p) {
  const int m = p.degree();
  if (m < 1) return BinaryForm<S>{};
  std::vector<S> v(m);
  for (int k = 0; k < m; ++k) v[k] = p.u[k] * S(m - k);
  return BinaryForm<S>(std::move(v));
}

template <class S>
BinaryForm<S> bf_derivative_z2(const BinaryForm<S>& p) {
  const int m = p.degree();
  if (m < 1) return BinaryForm<S>{};
  std::vector<S> v(m);
  for (int k = 0; k < m; ++k) v[k] = p.u[k + 1] * S(k + 1);
  return BinaryForm<S>(std::move(v));
}

template <class S>
MultiPoly<S> binary_to_poly(const BinaryForm<S>& p) {
  MultiPoly<S> out(binary_vars());
  const int d = p.degree();
  for (int k = 0; k <= d; ++k)
    out.add_term({d - k, k}, p.u[k]);
  return out;
}

template <class S>
BinaryForm<S> poly_to_binary(const MultiPoly<S>& p, int degree) {
  if (p.vars() != binary_vars())
    throw std::invalid_argument("expected a polynomial in z1, z2");
  std::vector<S> u(degree + 1, S(0));
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != degree)
      throw std::invalid_argument("polynomial is not homogeneous of the stated degree");
    u[e[1]] = c;
  }
  return BinaryForm<S>(std::move(u));
}

namespace detail_bf {
template <class S>
S pow_scalar(S base, int e) {
  S out(1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}
}  // namespace detail_bf

// Resultant of two binary forms at their formal degrees, as the determinant
// of the (m+n) x (m+n) Sylvester matrix (p-rows first). Degree-0 forms are
// constants c with Res(c, q) = c^deg(q).
template <class S>
S resultant(const BinaryForm<S>& p, const BinaryForm<S>& q) {
  if (p.is_zero_form() || q.is_zero_form())
    throw std::invalid_argument("resultant of the zero form");
  const int m = p.degree(), n = q.degree();
  if (m < 1) return detail_bf::pow_scalar(p.u[0], n);
  if (n < 1) return detail_bf::pow_scalar(q.u[0], m);
  Matrix<S> syl(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl.at(r, r + k) = p.u[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl.at(n + r, r + k) = q.u[k];
  return det(std::move(syl));
}

}  // namespace icosa
