// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ptatom/gaussian_rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ptatom {

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!(b(k, j) == T(0))) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  /// Stacks b below this matrix.
  Matrix stacked(const Matrix& b) const {
    if (b.cols_ != cols_) throw std::invalid_argument("stack shape mismatch");
    Matrix m(rows_ + b.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Basis of the kernel of m by exact Gauss-Jordan elimination. Each vector
/// has a 1 at its free column and zeros at the other free columns.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && m(piv, col) == T(0)) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(row, j));
    const T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < C; ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || m(r, col) == T(0)) continue;
      const T f = m(r, col);
      for (std::size_t j = col; j < C; ++j)
        if (!(m(row, j) == T(0))) m(r, j) -= f * m(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(C, T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ptatom
