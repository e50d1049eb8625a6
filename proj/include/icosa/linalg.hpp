#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "icosa/fields.hpp"

namespace icosa {

// Dense matrix over an exact field S (+, -, *, /, ==, is_zero, S(int)).
// Elimination pivots on the first nonzero entry, so this is for exact
// scalars; numeric linear algebra goes through Eigen instead.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, S fill = S(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  S& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const S& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        if (is_zero(x.at(i, k))) continue;
        for (size_t j = 0; j < y.cols_; ++j)
          out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix out = x;
    for (size_t i = 0; i < out.data_.size(); ++i)
      out.data_[i] = out.data_[i] + y.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix out = x;
    for (size_t i = 0; i < out.data_.size(); ++i)
      out.data_[i] = out.data_[i] - y.data_[i];
    return out;
  }
  Matrix scaled(const S& k) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = v * k;
    return out;
  }
  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<S> out(rows_, S(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out[i] = out[i] + at(i, j) * v[j];
    return out;
  }
  bool operator==(const Matrix& y) const {
    return rows_ == y.rows_ && cols_ == y.cols_ && data_ == y.data_;
  }

  void require_same_shape(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

 private:
  size_t rows_, cols_;
  std::vector<S> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<size_t> rref_in_place(Matrix<S>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && is_zero(m.at(p, col))) ++p;
    if (p == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const S inv = S(1) / m.at(row, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      const S factor = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
size_t rank(Matrix<S> m) {
  return rref_in_place(m).size();
}

// Basis of the right kernel {v : M v = 0}, deterministic: one vector per free
// column (in increasing order), with a 1 in the free position.
template <class S>
std::vector<std::vector<S>> kernel_basis(Matrix<S> m) {
  const size_t n = m.cols();
  const std::vector<size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<S> v(n, S(0));
    v[free_col] = S(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
S det(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  const size_t n = m.rows();
  S out(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && is_zero(m.at(p, col))) ++p;
    if (p == n) return S(0);
    if (p != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      out = -out;
    }
    out = out * m.at(col, col);
    const S inv = S(1) / m.at(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (is_zero(m.at(i, col))) continue;
      const S factor = m.at(i, col) * inv;
      for (size_t j = col; j < n; ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
    }
  }
  return out;
}

// Inverse of a square matrix via augmented elimination; nullopt if singular.
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const size_t n = a.rows();
  Matrix<S> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = S(1);
  }
  const std::vector<size_t> pivots = rref_in_place(aug);
  if (pivots.size() != n || (!pivots.empty() && pivots.back() >= n))
    return std::nullopt;
  Matrix<S> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

// Solves A x = b for square invertible A; nullopt if singular.
template <class S>
std::optional<std::vector<S>> solve_linear(const Matrix<S>& a, const std::vector<S>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw std::invalid_argument("solve_linear shape mismatch");
  Matrix<S> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const std::vector<size_t> pivots = rref_in_place(aug);
  if (pivots.size() != a.cols() || (!pivots.empty() && pivots.back() >= a.cols()))
    return std::nullopt;
  std::vector<S> x(a.cols());
  for (size_t i = 0; i < a.cols(); ++i) x[i] = aug.at(i, a.cols());
  return x;
}

}  // namespace icosa
