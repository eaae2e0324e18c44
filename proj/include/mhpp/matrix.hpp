#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mhpp/errors.hpp"

namespace mhpp {

/// Row-major dense matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InputError("Matrix: data size does not match shape");
  }
  /// Nested rows; all rows must have equal length.
  Matrix(const std::vector<std::vector<T>>& rows) {  // NOLINT(google-explicit-constructor)
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("Matrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) out.data_.push_back((*this)(r, c));
    }
    return out;
  }

  /// Rows and columns both restricted to `idx` (a principal submatrix when square).
  Matrix principal(const std::vector<std::size_t>& idx) const { return submatrix(idx, idx); }

  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix out;
    out.rows_ = row_idx.size();
    out.cols_ = col_idx.size();
    out.data_.reserve(out.rows_ * out.cols_);
    for (std::size_t r : row_idx) {
      for (std::size_t c : col_idx) out.data_.push_back((*this)(r, c));
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> d;
    d.reserve(data_.size());
    for (const auto& x : data_) d.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(d));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// a^T a.
template <class T>
Matrix<T> gram(const Matrix<T>& a, const T& zero) {
  Matrix<T> out(a.cols(), a.cols(), zero);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      T s = zero;
      for (std::size_t k = 0; k < a.rows(); ++k) s += a(k, i) * a(k, j);
      out(i, j) = std::move(s);
    }
  }
  return out;
}

/// Division-free determinant (Berkowitz).  Builds the characteristic
/// polynomial det(xI - A) as a product of Toeplitz matrices and returns
/// (-1)^n times its constant coefficient.  Only ring operations are used,
/// so T may be a polynomial ring.  `one` fixes the multiplicative identity
/// (and, through one - one, the zero) of T.
template <class T>
T berkowitz_det(const Matrix<T>& a, const T& one) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T zero = one;
  zero -= one;
  if (n == 0) return one;

  // Current characteristic-polynomial vector, highest power first.  Start
  // with the trailing 1x1 block A[n-1][n-1].
  std::vector<T> poly{one, zero};
  poly[1] -= a(n - 1, n - 1);

  for (std::size_t k = n - 1; k-- > 0;) {
    // Block decomposition of the trailing submatrix starting at k:
    //   [ a_kk  R ]
    //   [ C     S ]   with S of size m = n-1-k.
    const std::size_t m = n - 1 - k;
    // Toeplitz column: 1, -a_kk, -R C, -R S C, ..., -R S^{m-1} C.
    std::vector<T> col;
    col.reserve(m + 2);
    col.push_back(one);
    T neg_akk = zero;
    neg_akk -= a(k, k);
    col.push_back(std::move(neg_akk));
    std::vector<T> v(m, zero);  // S^j C
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    for (std::size_t j = 0; j < m; ++j) {
      T rv = zero;
      for (std::size_t i = 0; i < m; ++i) rv += a(k, k + 1 + i) * v[i];
      T neg = zero;
      neg -= rv;
      col.push_back(std::move(neg));
      if (j + 1 < m) {
        std::vector<T> next(m, zero);
        for (std::size_t r = 0; r < m; ++r) {
          for (std::size_t c = 0; c < m; ++c) next[r] += a(k + 1 + r, k + 1 + c) * v[c];
        }
        v = std::move(next);
      }
    }
    // Toeplitz matrix of shape (m+2) x (m+1) times poly (length m+1).
    std::vector<T> next(m + 2, zero);
    for (std::size_t r = 0; r < m + 2; ++r) {
      for (std::size_t c = 0; c <= r && c < m + 1; ++c) next[r] += col[r - c] * poly[c];
    }
    poly = std::move(next);
  }
  T det = poly.back();
  if (n % 2 == 1) {
    T neg = zero;
    neg -= det;
    return neg;
  }
  return det;
}

}  // namespace mhpp
