#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "icosa/fields.hpp"

namespace icosa {

// Dense univariate polynomial over an exact field S, coefficients ascending
// (c[i] multiplies x^i). Kept normalized: no trailing zero coefficients, so
// the zero polynomial has an empty coefficient vector and degree -1.
template <class S>
struct UniPoly {
  std::vector<S> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c(std::move(coeffs)) { normalize(); }
  static UniPoly constant(S v) { return UniPoly(std::vector<S>{std::move(v)}); }
  static UniPoly x() { return UniPoly(std::vector<S>{S(0), S(1)}); }
  // x - r
  static UniPoly linear_root(const S& r) { return UniPoly(std::vector<S>{-r, S(1)}); }

  void normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero_poly() const { return c.empty(); }
  const S& leading() const {
    if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
  }

  S evaluate(const S& x) const {
    S out(0);
    for (size_t i = c.size(); i-- > 0;) out = out * x + c[i];
    return out;
  }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (S& v : out.c) v = -v;
    return out;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), S(0));
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = out.c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] + b.c[i];
    out.normalize();
    return out;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly();
    UniPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, S(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (size_t j = 0; j < b.c.size(); ++j)
        out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
    }
    out.normalize();
    return out;
  }
  UniPoly scaled(const S& k) const {
    UniPoly out = *this;
    for (S& v : out.c) v = v * k;
    out.normalize();
    return out;
  }
  UniPoly pow(unsigned e) const {
    UniPoly out = constant(S(1));
    UniPoly base = *this;
    while (e > 0) {
      if (e & 1u) out = out * base;
      base = base * base;
      e >>= 1u;
    }
    return out;
  }
  UniPoly derivative() const {
    UniPoly out;
    if (c.size() < 2) return out;
    out.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) out.c[i - 1] = c[i] * S(static_cast<int>(i));
    out.normalize();
    return out;
  }
  UniPoly monic() const {
    if (is_zero_poly()) return *this;
    return scaled(S(1) / leading());
  }
  bool operator==(const UniPoly&) const = default;
};

// Euclidean division: a = q*b + r with deg r < deg b.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divrem(UniPoly<S> a, const UniPoly<S>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  UniPoly<S> q;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, S(0));
  const S lead_inv = S(1) / b.leading();
  while (!a.is_zero_poly() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    const S factor = a.leading() * lead_inv;
    q.c[shift] = q.c[shift] + factor;
    for (int i = 0; i <= b.degree(); ++i)
      a.c[i + shift] = a.c[i + shift] - factor * b.c[i];
    a.normalize();
  }
  q.normalize();
  return {std::move(q), std::move(a)};
}

// Monic gcd via the Euclidean algorithm.
template <class S>
UniPoly<S> gcd_poly(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero_poly()) {
    auto [q, r] = divrem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    b = b.monic();  // keeps coefficient growth in check over Q
  }
  return a.monic();
}

// Multiplicity of r as a root of p.
template <class S>
int root_multiplicity(UniPoly<S> p, const S& r) {
  int m = 0;
  const UniPoly<S> lin = UniPoly<S>::linear_root(r);
  while (!p.is_zero_poly() && is_zero(p.evaluate(r))) {
    p = divrem(std::move(p), lin).first;
    ++m;
  }
  return m;
}

// Yun's squarefree decomposition: p = lc * prod_i out[i].factor^out[i].multiplicity
// with the factors monic, squarefree, and pairwise coprime.
template <class S>
struct SquarefreePart {
  UniPoly<S> factor;
  int multiplicity;
};

template <class S>
std::vector<SquarefreePart<S>> squarefree_decomposition(const UniPoly<S>& p) {
  std::vector<SquarefreePart<S>> out;
  if (p.degree() < 1) return out;
  const UniPoly<S> a = p.monic();
  const UniPoly<S> da = a.derivative();
  UniPoly<S> g = gcd_poly(a, da);
  UniPoly<S> w = divrem(a, g).first;  // product of the distinct factors
  UniPoly<S> y = divrem(da, g).first;
  // Maintain z = y - w' and peel one multiplicity level per round.
  int mult = 1;
  while (w.degree() > 0) {
    UniPoly<S> z = y - w.derivative();
    UniPoly<S> f = gcd_poly(w, z);
    if (f.degree() > 0) out.push_back({f, mult});
    w = divrem(std::move(w), f).first;
    y = divrem(std::move(z), f).first;
    ++mult;
  }
  return out;
}

}  // namespace icosa
