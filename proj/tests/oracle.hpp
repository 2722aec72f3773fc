#pragma once

// Independent test oracles. Everything here deliberately avoids the code
// paths it is used to check: rank by plain Gaussian elimination (the
// implementation uses Bareiss), characteristic polynomial by determinant
// interpolation (the implementation uses Faddeev-LeVerrier).

#include "matrix.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

namespace oracle {

using ginv::Matrix;
using ginv::Polynomial;
using ginv::Scalar;

inline std::size_t rank_gauss(Matrix m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t piv = rk;
    while (piv < r && m.at(piv, col).is_zero()) ++piv;
    if (piv == r) continue;
    for (std::size_t j = 0; j < c; ++j) {
      Scalar t = m.at(rk, j);
      m.set(rk, j, m.at(piv, j));
      m.set(piv, j, t);
    }
    for (std::size_t i = rk + 1; i < r; ++i) {
      Scalar f = m.at(i, col) / m.at(rk, col);
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, m.at(i, j) - f * m.at(rk, j));
    }
    ++rk;
  }
  return rk;
}

// Non-pivot column count of the row echelon form = kernel dimension.
inline std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank_gauss(m); }

inline Scalar det_gauss(Matrix m) {
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      det = -det;
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = m.at(col, j);
        m.set(col, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    }
    det *= m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      Scalar f = m.at(i, col) / m.at(col, col);
      for (std::size_t j = col; j < n; ++j) m.set(i, j, m.at(i, j) - f * m.at(col, j));
    }
  }
  return det;
}

// det(lambda I - a) by evaluation at n+1 integer points and Lagrange
// interpolation.
inline Polynomial char_poly_interp(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar x(static_cast<long>(k));
    xs.push_back(x);
    ys.push_back(det_gauss(x * Matrix::identity(n) - a));
  }
  Polynomial acc;
  for (std::size_t i = 0; i <= n; ++i) {
    Polynomial term = Polynomial::constant(Scalar(1));
    Scalar denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      term = term * (Polynomial::x() - Polynomial::constant(xs[j]));
      denom *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / denom) * term;
  }
  return acc;
}

}  // namespace oracle
