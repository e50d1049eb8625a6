#pragma once

#include <stdexcept>
#include <vector>

namespace icosa {

// Skew-symmetric square matrix over a ring T (+, -, *). Only the strict
// upper triangle is stored; the diagonal is identically the supplied zero
// element, so skewness holds by construction. T may be a scalar field or a
// polynomial ring.
template <class T>
class SkewMatrix {
 public:
  SkewMatrix(size_t n, T zero)
      : n_(n), zero_(std::move(zero)), upper_(n * (n - 1) / 2, zero_) {}

  size_t size() const { return n_; }
  const T& zero_element() const { return zero_; }

  // Sets entry (i, j); storing into (j, i) records the negated value.
  void set(size_t i, size_t j, T v) {
    if (i == j) throw std::invalid_argument("diagonal of a skew matrix is fixed at zero");
    if (i < j) upper_[index(i, j)] = std::move(v);
    else upper_[index(j, i)] = -v;
  }

  T at(size_t i, size_t j) const {
    if (i == j) return zero_;
    if (i < j) return upper_[index(i, j)];
    return -upper_[index(j, i)];
  }

 private:
  size_t index(size_t i, size_t j) const {
    if (j >= n_) throw std::out_of_range("skew matrix index");
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  size_t n_;
  T zero_;
  std::vector<T> upper_;
};

namespace detail {

template <class T>
T pfaffian_rec(const SkewMatrix<T>& m, std::vector<size_t> idx) {
  if (idx.size() == 2) return m.at(idx[0], idx[1]);
  // Expansion along the first remaining row:
  //   Pf(M) = sum_j (-1)^j m[i0, ij] Pf(M with rows/cols i0, ij removed).
  T out = m.zero_element();
  bool plus = true;
  for (size_t k = 1; k < idx.size(); ++k) {
    std::vector<size_t> rest;
    rest.reserve(idx.size() - 2);
    for (size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    const T sub = pfaffian_rec(m, std::move(rest));
    const T contrib = m.at(idx[0], idx[k]) * sub;
    if (plus) out = out + contrib;
    else out = out - contrib;
    plus = !plus;
  }
  return out;
}

}  // namespace detail

// Pfaffian of an even-dimensional skew matrix, 2 <= n <= 12, by recursive
// first-row expansion. pfaffian(M)^2 = det(M).
template <class T>
T pfaffian(const SkewMatrix<T>& m) {
  const size_t n = m.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian of odd-dimensional matrix");
  if (n < 2 || n > 12) throw std::invalid_argument("pfaffian dimension outside [2, 12]");
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  return detail::pfaffian_rec(m, std::move(idx));
}

}  // namespace icosa
