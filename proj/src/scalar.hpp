#pragma once

#include <gmpxx.h>

#include <string>

namespace ginv {

// Element of Q(i): re + im*i with both parts exact rationals.
// mpq_class keeps every value in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "p/q" for real values, "p/q+r/s*i" otherwise.
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace ginv
