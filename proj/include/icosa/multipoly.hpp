#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "icosa/fields.hpp"

namespace icosa {

// Sparse multivariate polynomial over a scalar S. S needs +, -, *, ==,
// construction from int, and a free is_zero(S). Zero coefficients are never
// stored. Binary operations require identical ordered variable lists.
template <class S>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, S>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, S value) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), std::move(value));
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, size_t index) {
    MultiPoly p(std::move(vars));
    if (index >= p.nvars()) throw std::invalid_argument("variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, S(1));
    return p;
  }
  static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, S coeff) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.nvars()) throw std::invalid_argument("exponent arity mismatch");
    p.add_term(std::move(exps), std::move(coeff));
    return p;
  }

  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }

  void add_term(Exponents exps, S coeff) {
    if (exps.size() != nvars()) throw std::invalid_argument("exponent arity mismatch");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (!is_zero(coeff)) terms_.emplace(std::move(exps), std::move(coeff));
    } else {
      it->second = it->second + coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  S coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? S(0) : it->second;
  }

  MultiPoly operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
    x.require_same_vars(y);
    MultiPoly out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) {
    x.require_same_vars(y);
    MultiPoly out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    x.require_same_vars(y);
    MultiPoly out(x.vars_);
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exponents e(ex.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
        out.add_term(std::move(e), cx * cy);
      }
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& y) { return *this = *this + y; }
  MultiPoly& operator-=(const MultiPoly& y) { return *this = *this - y; }
  MultiPoly& operator*=(const MultiPoly& y) { return *this = *this * y; }

  MultiPoly scaled(const S& k) const {
    MultiPoly out(vars_);
    if (is_zero(k)) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * k);
    return out;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly out = constant(vars_, S(1));
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1u) out = out * base;
      base = base * base;
      e >>= 1u;
    }
    return out;
  }

  MultiPoly derivative(size_t var) const {
    if (var >= nvars()) throw std::invalid_argument("variable index out of range");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(std::move(d), c * S(e[var]));
    }
    return out;
  }

  int total_degree() const {  // -1 for the zero polynomial
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      if (d > deg) deg = d;
    }
    return deg;
  }

  bool is_homogeneous(int* deg_out = nullptr) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      if (deg == -1) deg = d;
      else if (d != deg) return false;
    }
    if (deg_out) *deg_out = deg;
    return true;
  }

  S evaluate(const std::vector<S>& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("point arity mismatch");
    std::vector<std::vector<S>> powers = power_table(point);
    S out(0);
    for (const auto& [e, c] : terms_) {
      S term = c;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * powers[i][e[i]];
      out = out + term;
    }
    return out;
  }

  // Substitutes images[i] for variable i. All images must share one variable
  // list, which becomes the variable list of the result.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars()) throw std::invalid_argument("image arity mismatch");
    for (size_t i = 1; i < images.size(); ++i) images[0].require_same_vars(images[i]);
    const std::vector<std::string>& out_vars =
        images.empty() ? vars_ : images[0].vars_;
    // Cache powers of each image up to the largest exponent used.
    std::vector<int> max_exp(nvars(), 0);
    for (const auto& [e, c] : terms_)
      for (size_t i = 0; i < e.size(); ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<MultiPoly>> powers(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
      powers[i].push_back(constant(out_vars, S(1)));
      for (int k = 1; k <= max_exp[i]; ++k)
        powers[i].push_back(powers[i].back() * images[i]);
    }
    MultiPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(out_vars, c);
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * powers[i][e[i]];
      out += term;
    }
    return out;
  }

  bool operator==(const MultiPoly& y) const {
    return vars_ == y.vars_ && terms_ == y.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + scalar_str(c) + ")";
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*" + vars_[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

  void require_same_vars(const MultiPoly& y) const {
    if (vars_ != y.vars_)
      throw std::invalid_argument("variable list mismatch between polynomials");
  }

 private:
  std::vector<std::vector<S>> power_table(const std::vector<S>& point) const {
    std::vector<int> max_exp(nvars(), 0);
    for (const auto& [e, c] : terms_)
      for (size_t i = 0; i < e.size(); ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<S>> powers(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
      powers[i].push_back(S(1));
      for (int k = 1; k <= max_exp[i]; ++k)
        powers[i].push_back(powers[i].back() * point[i]);
    }
    return powers;
  }

  template <class T>
  static std::string scalar_str(const T& c) {
    using std::to_string;
    using icosa::to_string;
    if constexpr (requires { to_string(c); }) return to_string(c);
    else return "?";
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Coefficient-wise conversion to a new scalar type (same variables).
template <class T, class S, class F>
MultiPoly<T> map_poly(const MultiPoly<S>& p, F&& f) {
  MultiPoly<T> out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, f(c));
  return out;
}

}  // namespace icosa
