#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lozenge/exactnum.hpp"

namespace lozenge {

/// Dense row-major matrix over an exact scalar.
///
/// Element access is 1-based through at(i, j) so that formula code reads the
/// same as the published index ranges. Storage offsets stay private.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[offset(i, j)]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[offset(i, j)]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw std::out_of_range("matrix index out of range");
    }
    return (i - 1) * cols_ + (j - 1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix to_exact(const IntegerMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The 0x0 determinant is 1. Throws std::invalid_argument for non-square input.
Integer bareiss_det(const IntegerMatrix& m);

/// Rational version: rows are cleared of denominators, the integer determinant
/// is taken, and the row scalings are divided back out.
Rational bareiss_det(const ExactMatrix& m);

/// Gauss-Jordan inverse over the rationals. Throws std::domain_error when the
/// matrix is singular and std::invalid_argument when it is not square.
ExactMatrix inverse_by_elimination(const ExactMatrix& m);

}  // namespace lozenge
