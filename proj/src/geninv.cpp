#include "geninv.hpp"

#include <string>

#include "error.hpp"

namespace ginv {

namespace {

void require_square(const Matrix& a, const char* who) {
  if (!a.is_square()) fail(Errc::dimension_mismatch, std::string(who) + ": matrix must be square");
}

void verify(bool ok, const char* what) {
  if (!ok) fail(Errc::verification_failure, std::string("certificate check failed: ") + what);
}

}  // namespace

DrazinCertificate drazin(const Matrix& a) {
  require_square(a, "drazin");
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(n);

  Polynomial chi = char_poly(a);
  std::size_t m = 0;
  while (chi.coeff(m).is_zero()) ++m;  // multiplicity of the eigenvalue 0
  Matrix api(n, n);
  if (m > 0) {
    std::vector<Scalar> qc(chi.coeffs().begin() + static_cast<long>(m), chi.coeffs().end());
    Polynomial q{std::move(qc)};  // chi = lambda^m * q, q(0) != 0
    api = eval_poly(crt_interpolant(Polynomial::x().pow(m), q), a);
  }
  Matrix ad = inverse(a + api) * (id - api);

  DrazinCertificate cert{a, ad, 0, api, a * a * ad, a * api};
  if (m > 0) {
    auto idx = nilpotency_index(cert.nil_part);
    verify(idx.has_value(), "a a^pi nilpotent");
    cert.index = *idx;
  }

  verify(a * ad == ad * a, "a a^D = a^D a");
  verify(ad * a * ad == ad, "a^D a a^D = a^D");
  verify(a.pow(cert.index + 1) * ad == a.pow(cert.index), "a^{k+1} a^D = a^k");
  verify(api * api == api, "a^pi idempotent");
  verify(cert.core + cert.nil_part == a, "core + nil = a");
  verify((cert.index == 0) == api.is_zero(), "index 0 iff a^pi = 0");
  return cert;
}

std::optional<StronglyDrazinCertificate> strongly_drazin(const Matrix& a) {
  require_square(a, "strongly_drazin");
  if (!nilpotency_index(a - a * a).has_value()) return std::nullopt;
  DrazinCertificate d = drazin(a);
  Matrix e = a * d.inverse;
  Matrix nil = a - e;
  auto nil_idx = nilpotency_index(nil);
  verify(nil_idx.has_value(), "a - a a^D nilpotent");
  StronglyDrazinCertificate cert{a, d.inverse, e, nil, *nil_idx};

  verify(e * e == e, "idempotent part");
  verify(e + nil == a, "e + n = a");
  verify(e * nil == nil * e, "e n = n e");
  verify(a * cert.inverse == cert.inverse * a, "a x = x a");
  verify(cert.inverse * a * cert.inverse == cert.inverse, "x a x = x");
  verify(nilpotency_index(a - a * cert.inverse).has_value(), "a - a x nilpotent");
  return cert;
}

std::optional<std::size_t> is_hirano(const Matrix& a) {
  require_square(a, "is_hirano");
  return nilpotency_index(a - a * a * a);
}

SpectrumSummary spectrum_summary(const Matrix& a) {
  require_square(a, "spectrum_summary");
  Polynomial p = char_poly(a);
  SpectrumSummary s{0, 0, 0, Polynomial()};
  const Polynomial roots[3] = {
      Polynomial::x(),
      Polynomial::x() - Polynomial::constant(Scalar(1)),
      Polynomial::x() + Polynomial::constant(Scalar(1)),
  };
  std::size_t* counts[3] = {&s.mult_zero, &s.mult_one, &s.mult_minus_one};
  for (int k = 0; k < 3; ++k) {
    for (;;) {
      auto [quo, rem] = poly_divrem(p, roots[k]);
      if (!rem.is_zero()) break;
      p = quo;
      ++*counts[k];
    }
  }
  s.other_factor = p;
  return s;
}

HiranoCertificate hirano(const Matrix& a) {
  require_square(a, "hirano");
  auto defect = is_hirano(a);
  if (!defect.has_value()) fail(Errc::not_hirano, "a - a^3 is not nilpotent");
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(n);

  SpectrumSummary s = spectrum_summary(a);
  verify(s.other_factor == Polynomial::constant(Scalar(1)),
         "eigenvalues confined to {-1, 0, 1}");

  const Polynomial lam = Polynomial::x();
  const Polynomial lam_m1 = lam - Polynomial::constant(Scalar(1));
  const Polynomial lam_p1 = lam + Polynomial::constant(Scalar(1));

  // Spectral projectors by CRT in Q(i)[lambda]: P_r = u_r(a) with u_r = 1
  // modulo the root-r factor and 0 modulo the rest of the char polynomial.
  auto projector = [&](std::size_t mult, const Polynomial& own, const Polynomial& rest) {
    if (mult == 0) return Matrix::zero(n, n);
    if (rest.degree() <= 0) return id;
    return eval_poly(crt_interpolant(own, rest), a);
  };
  Matrix p1 = projector(s.mult_one, lam_m1.pow(s.mult_one),
                        lam.pow(s.mult_zero) * lam_p1.pow(s.mult_minus_one));
  Matrix pm1 = projector(s.mult_minus_one, lam_p1.pow(s.mult_minus_one),
                         lam.pow(s.mult_zero) * lam_m1.pow(s.mult_one));
  Matrix p0 = id - p1 - pm1;
  Matrix t = p1 - pm1;
  Matrix nil = a - t;

  HiranoCertificate cert{a, drazin(a).inverse, t, nil, p0, p1, pm1, *defect};

  verify(t * t * t == t, "t tripotent");
  verify(t * nil == nil * t, "t n = n t");
  verify(t + nil == a, "t + n = a");
  verify(nil.pow(n).is_zero(), "n nilpotent");
  for (const Matrix* p : {&p0, &p1, &pm1}) {
    verify(*p * *p == *p, "projector idempotent");
    verify(*p * a == a * *p, "projector commutes with a");
  }
  verify(p0 + p1 + pm1 == id, "projectors resolve the identity");
  verify((p0 * p1).is_zero() && (p0 * pm1).is_zero() && (p1 * pm1).is_zero(),
         "projectors pairwise orthogonal");
  verify(a * cert.inverse == cert.inverse * a, "a x = x a");
  verify(cert.inverse * a * cert.inverse == cert.inverse, "x a x = x");
  verify(nilpotency_index(a * a - a * cert.inverse).has_value(), "a^2 - a x nilpotent");
  return cert;
}

Matrix cline_hirano(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.cols() || A.cols() != B.rows())
    fail(Errc::dimension_mismatch, "cline_hirano: need A m x n and B n x m");
  Matrix ab = A * B;
  if (!is_hirano(ab).has_value()) fail(Errc::not_hirano, "AB is not Hirano invertible");
  Matrix abh = hirano(ab).inverse;
  Matrix out = B * abh * abh * A;
  if (out != hirano(B * A).inverse)
    fail(Errc::verification_failure,
         "cline route disagrees with the direct (BA)^H computation");
  return out;
}

namespace {

Matrix hirano_sum(const Matrix& a, const Matrix& b,
                  const std::vector<std::pair<const char*, Matrix>>& residuals) {
  require_square(a, "hirano_sum");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::dimension_mismatch, "summands must have equal shape");
  if (!is_hirano(a).has_value()) fail(Errc::hypothesis_violated, "a is not Hirano invertible");
  if (!is_hirano(b).has_value()) fail(Errc::hypothesis_violated, "b is not Hirano invertible");
  for (const auto& [name, res] : residuals)
    if (!res.is_zero())
      fail(Errc::hypothesis_violated, std::string("hypothesis violated: ") + name);
  Matrix sum = a + b;
  if (!is_hirano(sum).has_value())
    fail(Errc::not_hirano, "a + b failed the Hirano criterion (counterexample?)");
  return hirano(sum).inverse;
}

}  // namespace

Matrix hirano_sum_orthogonal(const Matrix& a, const Matrix& b) {
  return hirano_sum(a, b, {{"ab = 0", a * b}});
}

Matrix hirano_sum_225(const Matrix& a, const Matrix& b) {
  return hirano_sum(a, b, {{"aba = 0", a * b * a}, {"ab^2 = 0", a * b * b}});
}

}  // namespace ginv
