#include "polynomial.hpp"

#include <algorithm>

#include "error.hpp"

namespace ginv {

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Scalar(1) / leading()) * *this;
}

Scalar Polynomial::operator()(const Scalar& v) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  std::vector<Scalar> c(p.coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(std::size_t k) const {
  Polynomial acc = Polynomial::constant(Scalar(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) fail(Errc::singular, "polynomial division by zero");
  std::vector<Scalar> rem = p.coeffs();
  const long dq = q.degree();
  if (p.degree() < dq) return {Polynomial(), p};
  std::vector<Scalar> quo(p.degree() - dq + 1);
  const Scalar lead = q.leading();
  for (long k = p.degree() - dq; k >= 0; --k) {
    Scalar c = rem[k + dq] / lead;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (long j = 0; j <= dq; ++j) rem[k + j] -= c * q.coeff(j);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p, b = q;
  while (!b.is_zero()) {
    auto [quo, rem] = poly_divrem(a, b);
    (void)quo;
    a = b;
    b = rem;
  }
  return a.monic();
}

Polynomial crt_interpolant(const Polynomial& m1, const Polynomial& m2) {
  // Extended Euclid: s*m1 + t*m2 = g. With g a unit, u = t*m2/g satisfies
  // u = 1 (mod m1) and u = 0 (mod m2).
  Polynomial r0 = m1, r1 = m2;
  Polynomial t0, t1 = Polynomial::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [quo, rem] = poly_divrem(r0, r1);
    r0 = r1;
    r1 = rem;
    Polynomial tn = t0 - quo * t1;
    t0 = t1;
    t1 = tn;
  }
  if (r0.degree() != 0)
    fail(Errc::non_coprime_moduli, "crt moduli share a nontrivial factor");
  Polynomial u = (Scalar(1) / r0.leading()) * (t0 * m2);
  return poly_divrem(u, m1 * m2).second;
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) fail(Errc::dimension_mismatch, "char_poly of non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
  std::vector<Scalar> coeffs(n + 1);
  coeffs[n] = Scalar(1);
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = a * m;
    Scalar ck = -(am.trace() / Scalar(static_cast<long>(k)));
    coeffs[n - k] = ck;
    if (k < n) m = am + ck * Matrix::identity(n);
  }
  return Polynomial(std::move(coeffs));
}

Matrix eval_poly(const Polynomial& p, const Matrix& a) {
  if (!a.is_square()) fail(Errc::dimension_mismatch, "eval_poly on non-square matrix");
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * a + *it * Matrix::identity(n);
  return acc;
}

std::optional<std::size_t> nilpotency_index(const Matrix& a) {
  if (!a.is_square()) fail(Errc::dimension_mismatch, "nilpotency_index of non-square matrix");
  Matrix p = a;
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    if (p.is_zero()) return m;
    p = p * a;
  }
  return std::nullopt;  // a^n != 0, so a is not nilpotent
}

}  // namespace ginv
