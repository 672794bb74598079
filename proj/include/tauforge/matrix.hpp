#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tauforge/error.hpp"
#include "tauforge/poly.hpp"
#include "tauforge/qscalar.hpp"

namespace tauforge {

/// Dense row-major matrix over a ring with `T(0L)` and `T(1L)`.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0L)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t k) { return data_[i * cols_ + k]; }
  const T& operator()(std::size_t i, std::size_t k) const { return data_[i * cols_ + k]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x.is_zero()) continue;
        for (std::size_t k = 0; k < b.cols_; ++k)
          if (!b(l, k).is_zero()) out(i, k) += x * b(l, k);
      }
    return out;
  }
  template <class S>
  Matrix scaled(const S& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = x * s;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) out(k, i) = (*this)(i, k);
    return out;
  }

  Matrix pow(int n) const {
    Matrix out = identity(rows_);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  /// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t k = 0; k < nc; ++k) out(i, k) = (*this)(r0 + i, c0 + k);
    return out;
  }

  /// Columns c0, c0+step, c0+2·step, ...
  Matrix column_slice(std::size_t c0, std::size_t step) const {
    Matrix out(rows_, (cols_ - c0 + step - 1) / step);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < out.cols_; ++k) out(i, k) = (*this)(i, c0 + k * step);
    return out;
  }

  /// Rows r0, r0+step, ...
  Matrix row_slice(std::size_t r0, std::size_t step) const { return transpose().column_slice(r0, step).transpose(); }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) out(i, k) = f((*this)(i, k));
    return out;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t k = 0; k < cols_; ++k) out += (k ? ", " : "") + (*this)(i, k).str();
      out += "]";
    }
    return out + "]";
  }

 private:
  void check_same(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<QScalar>;
using TPMatrix = Matrix<TimesPoly>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) out(i * b.rows() + r, k * b.cols() + c) = a(i, k) * b(r, c);
    }
  return out;
}

inline TPMatrix to_tp(const QMatrix& m) {
  return m.map([](const QScalar& x) { return TimesPoly(x); });
}

/// Basis of the right nullspace {x : A x = 0}, by exact Gauss-Jordan elimination over
/// QScalar choosing, in each column, the pivot of least q-degree span.
std::vector<std::vector<QScalar>> nullspace(const QMatrix& a);

/// Reading of an unknown matrix as a flat vector and back; row-major.
QMatrix reshape(const std::vector<QScalar>& flat, std::size_t rows, std::size_t cols);

}  // namespace tauforge
