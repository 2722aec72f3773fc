#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace ginv {

// Univariate polynomial over Q(i), coefficients lowest degree first.
// The zero polynomial is the empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar(0);
  }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  Polynomial monic() const;
  Scalar operator()(const Scalar& v) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(std::size_t k) const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& p, const Polynomial& q);
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);  // monic

// u with u = 1 (mod m1), u = 0 (mod m2), deg u < deg(m1*m2).
// Requires gcd(m1, m2) = 1.
Polynomial crt_interpolant(const Polynomial& m1, const Polynomial& m2);

// Monic characteristic polynomial det(lambda I - a), Faddeev-LeVerrier.
Polynomial char_poly(const Matrix& a);

// p(a) by Horner evaluation in the matrix algebra.
Matrix eval_poly(const Polynomial& p, const Matrix& a);

// Smallest m >= 1 with a^m = 0; empty when a is not nilpotent.
std::optional<std::size_t> nilpotency_index(const Matrix& a);

}  // namespace ginv
