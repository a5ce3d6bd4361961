#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pfmsf/errors.hpp"
#include "pfmsf/index_set.hpp"
#include "pfmsf/ring.hpp"

namespace pfmsf {

/// Dense row-major matrix over a ring. Storage indices are 0-based; the
/// algebraic routines take 1-based IndexSets.
template <Ring R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_one<R>();
    return m;
  }

  /// J_N: ones on the anti-diagonal.
  static Matrix anti_identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = ring_one<R>();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows and columns selected by 1-based index sets.
  Matrix submatrix(const IndexSet& row_set, const IndexSet& col_set) const {
    Matrix s(row_set.size(), col_set.size());
    for (std::size_t r = 0; r < row_set.size(); ++r)
      for (std::size_t c = 0; c < col_set.size(); ++c)
        s(r, c) = (*this)(static_cast<std::size_t>(row_set[r] - 1), static_cast<std::size_t>(col_set[c] - 1));
    return s;
  }

  Matrix principal_submatrix(const IndexSet& set) const { return submatrix(set, set); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - rhs.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator-(Matrix m) {
    for (auto& x : m.data_) x = -x;
    return m;
  }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ShapeError("matrix product: inner dimensions differ");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const R& x = lhs(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          if (rhs(k, j).is_zero()) continue;
          out(i, j) = out(i, j) + x * rhs(k, j);
        }
      }
    return out;
  }
  friend Matrix operator*(const R& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Leibniz expansion with factors taken in column order:
/// sum over sigma of sgn(sigma) M(sigma(1),1) M(sigma(2),2) ... M(sigma(m),m).
/// Over a noncommutative ring this is the column determinant.
template <Ring R>
R column_determinant(const Matrix<R>& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t size = m.rows();
  if (size == 0) return ring_one<R>();
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  R total{};
  do {
    R term = m(static_cast<std::size_t>(perm[0]), 0);
    for (std::size_t col = 1; col < size && !term.is_zero(); ++col) {
      term = term * m(static_cast<std::size_t>(perm[col]), col);
    }
    if (term.is_zero()) continue;
    if (permutation_sign(perm) > 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Exact determinant of a rational matrix by fraction-free elimination.
Rational determinant(const Matrix<Rational>& m);

/// Exact inverse; throws DomainError when singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);

}  // namespace pfmsf
