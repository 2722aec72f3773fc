#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "scalar.hpp"

namespace ginv {

// Dense matrix over Q(i), row-major. All arithmetic is exact.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  // Row-of-rows literal, handy in tests and fixtures.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = std::move(v); }

  bool is_zero() const;
  Scalar trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  Matrix operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(std::size_t k) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// 2x2 block assembly: [[a, b], [c, d]] with compatible shapes.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

// Exact inverse; throws Errc::singular when the determinant vanishes.
Matrix inverse(const Matrix& a);

// Rank over Q(i) by Bareiss fraction-free elimination on the
// denominator-cleared matrix.
std::size_t rank(const Matrix& a);

}  // namespace ginv
