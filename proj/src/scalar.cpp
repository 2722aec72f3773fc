#include "scalar.hpp"

#include "error.hpp"

namespace ginv {

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(Errc::singular, "division by zero scalar");
  // (x+yi)/(c+di) = (x+yi)(c-di) / (c^2+d^2)
  mpq_class norm = b.re_ * b.re_ + b.im_ * b.im_;
  return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / norm,
                (a.im_ * b.re_ - a.re_ * b.im_) / norm);
}

std::string Scalar::str() const {
  std::string out = re_.get_str();
  if (im_ != 0) {
    if (im_ > 0) out += "+";
    out += im_.get_str() + "*i";
  }
  return out;
}

}  // namespace ginv
