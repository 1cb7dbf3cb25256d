#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qwzeta/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwz {

// Dense row-major matrix over an exact scalar type. Immutable use after
// construction is the normal pattern; all arithmetic returns fresh values.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(check_size(rows, cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
  }

  Matrix operator*(const T& scalar) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
    return out;
  }

  // Row-parallel product; exact arithmetic makes the result independent of
  // the schedule.
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows_ >= 16)
#endif
    for (int i = 0; i < rows_; ++i) {
      for (int t = 0; t < cols_; ++t) {
        const T& a = (*this)(i, t);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const T& b = o(t, j);
          if (b == 0) continue;
          out(i, j) += a * b;
        }
      }
    }
    return out;
  }

 private:
  static size_t check_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

inline IntMatrix mat_pow(IntMatrix base, int exp) {
  if (!base.square()) throw std::invalid_argument("mat_pow needs a square matrix");
  IntMatrix acc = IntMatrix::identity(base.rows());
  while (exp > 0) {
    if (exp & 1) acc = acc * base;
    exp >>= 1;
    if (exp) base = base * base;
  }
  return acc;
}

namespace serial {

// Plain triple-loop product, kept as the reference the parallel kernel is
// tested and benchmarked against.
template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int t = 0; t < a.cols(); ++t) {
      const T& x = a(i, t);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += x * b(t, j);
    }
  return out;
}

}  // namespace serial

}  // namespace qwz
