#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "latcount/rational.hpp"

namespace latcount {

/// Dense row-major matrix over an exact scalar type (Int or Rat).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return std::span<T>(data_.data() + i * cols_, cols_);
  }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_.data() + i * cols_, cols_);
  }
  std::vector<T> row_vec(std::size_t i) const {
    auto r = row(i);
    return std::vector<T>(r.begin(), r.end());
  }
  std::vector<T> col_vec(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    assert(r.size() == cols_);
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<T> operator*(std::span<const T> x) const {
    assert(x.size() == cols_);
    std::vector<T> y(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

RatMat to_rat(const IntMat& m);
/// Throws PreconditionError when some entry is not integral.
IntMat to_int(const RatMat& m);

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  assert(a.size() == b.size());
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  return dot<Rat>(std::span<const Rat>(a), std::span<const Rat>(b));
}
inline Int dot(const IntVec& a, const IntVec& b) {
  return dot<Int>(std::span<const Int>(a), std::span<const Int>(b));
}
Rat dot(const RatVec& a, const IntVec& b);

template <class T>
bool is_zero(std::span<const T> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}
inline bool is_zero(const RatVec& v) { return is_zero<Rat>(v); }
inline bool is_zero(const IntVec& v) { return is_zero<Int>(v); }

template <class T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  std::vector<T> c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  std::vector<T> c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a) {
  std::vector<T> c(a);
  for (auto& x : c) x = -x;
  return c;
}

template <class T, class S>
std::vector<T> scaled(const std::vector<T>& a, const S& k) {
  std::vector<T> c(a);
  for (auto& x : c) x *= k;
  return c;
}

/// Divides an integer vector by the gcd of its entries (zero stays zero).
IntVec primitive(const IntVec& v);

/// Smallest positive integer multiple of a rational vector that is integral
/// and primitive, keeping direction.
IntVec primitive_direction(const RatVec& v);

}  // namespace latcount
