#include "matrix.hpp"

#include <utility>

#include "error.hpp"

namespace ginv {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    fail(Errc::dimension_mismatch, "entry count does not match rows*cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(Errc::dimension_mismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (!is_square()) fail(Errc::dimension_mismatch, "trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(Errc::dimension_mismatch, "matrix addition shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(Errc::dimension_mismatch, "matrix subtraction shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.data_[i * out.cols_ + j] += aik * b.at(k, j);
    }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = s * m.data_[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) fail(Errc::dimension_mismatch, "power of non-square matrix");
  Matrix acc = Matrix::identity(rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    fail(Errc::dimension_mismatch, "incompatible block shapes");
  Matrix out(a.rows() + c.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) out.set(a.rows() + i, j, c.at(i, j));
    for (std::size_t j = 0; j < d.cols(); ++j)
      out.set(a.rows() + i, a.cols() + j, d.at(i, j));
  }
  return out;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) fail(Errc::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  // Gauss-Jordan on [a | I] with exact rational pivots.
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work.at(piv, col).is_zero()) ++piv;
    if (piv == n) fail(Errc::singular, "singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = work.at(col, j);
        work.set(col, j, work.at(piv, j));
        work.set(piv, j, t);
        t = inv.at(col, j);
        inv.set(col, j, inv.at(piv, j));
        inv.set(piv, j, t);
      }
    }
    const Scalar p = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.set(col, j, work.at(col, j) / p);
      inv.set(col, j, inv.at(col, j) / p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Scalar f = work.at(i, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.set(i, j, work.at(i, j) - f * work.at(col, j));
        inv.set(i, j, inv.at(i, j) - f * inv.at(col, j));
      }
    }
  }
  return inv;
}

std::size_t rank(const Matrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  // Clear denominators row by row so every entry is a Gaussian integer,
  // then run Bareiss: all divisions below are exact.
  Matrix w(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < c; ++j) {
      mpz_class t;
      mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), a.at(i, j).re().get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), t.get_mpz_t(), a.at(i, j).im().get_den().get_mpz_t());
    }
    const Scalar f{mpq_class(l)};
    for (std::size_t j = 0; j < c; ++j) w.set(i, j, f * a.at(i, j));
  }
  Scalar prev_pivot(1);
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t piv = rk;
    while (piv < r && w.at(piv, col).is_zero()) ++piv;
    if (piv == r) continue;
    if (piv != rk)
      for (std::size_t j = 0; j < c; ++j) {
        Scalar t = w.at(rk, j);
        w.set(rk, j, w.at(piv, j));
        w.set(piv, j, t);
      }
    const Scalar p = w.at(rk, col);
    for (std::size_t i = rk + 1; i < r; ++i) {
      const Scalar f = w.at(i, col);
      for (std::size_t j = 0; j < c; ++j)
        w.set(i, j, (p * w.at(i, j) - f * w.at(rk, j)) / prev_pivot);
    }
    prev_pivot = p;
    ++rk;
  }
  return rk;
}

}  // namespace ginv
