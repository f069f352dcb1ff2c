#pragma once

// Dense matrices over an exact field and the Gaussian-elimination toolkit used
// throughout: rank, kernel, image, inverse, linear solve.
//
// The scalar type T must be constructible from int and support + - * / and ==.

#include "wittcob/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wittcob {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
  }

  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix v(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) v(r, c) = (*this)(r, first + c);
    return v;
  }

  Matrix rows_range(std::size_t first, std::size_t count) const {
    Matrix v(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < cols_; ++c) v(r, c) = (*this)(first + r, c);
    return v;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix v(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) v(r, c) = (*this)(r0 + r, c0 + c);
    return v;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  void swap_columns(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] + b.data_[i];
    return s;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] - b.data_[i];
    return s;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = -a.data_[i];
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
    }
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix p(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) p.data_[i] = s * a.data_[i];
    return p;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix shape mismatch: " + a.shape() + " vs " + b.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0 && (a.cols() == 0 || a.cols() == b.cols())) return b;
  if (b.rows() == 0 && (b.cols() == 0 || a.cols() == b.cols())) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

/// Reduced row echelon form together with its pivot columns.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of {x : m x = 0}, one column per basis vector.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix<T> basis(m.cols(), m.cols() - ech.pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = T(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) basis(ech.pivots[i], k) = -ech.reduced(i, free);
    ++k;
  }
  return basis;
}

/// Linearly independent subset of the columns spanning the column space.
template <class T>
Matrix<T> image_basis(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  Matrix<T> basis(m.rows(), ech.pivots.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, k) = m(r, ech.pivots[k]);
  return basis;
}

/// Columns to append to `basis` (independent columns) so that together they
/// span `ambient`'s column space; candidates are taken from `ambient` in order.
template <class T>
Matrix<T> complement_basis(const Matrix<T>& basis, const Matrix<T>& ambient) {
  Matrix<T> current = basis.cols() ? basis : Matrix<T>(ambient.rows(), 0);
  Matrix<T> added(ambient.rows(), 0);
  std::size_t r = rank(current);
  for (std::size_t c = 0; c < ambient.cols(); ++c) {
    Matrix<T> trial = hstack(current, ambient.column(c));
    const std::size_t tr = rank(trial);
    if (tr > r) {
      current = std::move(trial);
      added = hstack(added, ambient.column(c));
      r = tr;
    }
  }
  return added;
}

/// Solution of a x = b (b may have several columns), or nullopt if
/// inconsistent. Free variables are set to zero.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const auto ech = row_reduce(hstack(a, b.cols() ? b : Matrix<T>(a.rows(), 0)));
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = ech.reduced(i, a.cols() + c);
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto ech = row_reduce(hstack(m, Matrix<T>::identity(n)));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] >= n)) return std::nullopt;
  return ech.reduced.block(0, n, n, n);
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
      det = -det;
    }
    det = det * m(col, col);
    const T inv = T(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const T factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

/// True if every column of `vectors` lies in the column span of `basis`.
template <class T>
bool in_span(const Matrix<T>& basis, const Matrix<T>& vectors) {
  if (vectors.cols() == 0) return true;
  if (basis.cols() == 0) return vectors.is_zero_matrix();
  return rank(hstack(basis, vectors)) == rank(basis);
}

template <class T>
Matrix<T> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<T>(rows, cols);
}

std::string to_string(const QMatrix& m);

}  // namespace wittcob
