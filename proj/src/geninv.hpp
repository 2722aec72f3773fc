#pragma once

#include <cstddef>
#include <optional>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace ginv {

// Drazin inverse with decomposition witnesses. Every certificate is
// re-verified against its defining identities before it is returned.
struct DrazinCertificate {
  Matrix source;
  Matrix inverse;              // a^D
  std::size_t index;           // 0 iff a invertible
  Matrix spectral_idempotent;  // a^pi = 1 - a a^D
  Matrix core;                 // a^2 a^D
  Matrix nil_part;             // a a^pi
};

struct StronglyDrazinCertificate {
  Matrix source;
  Matrix inverse;  // a^sD
  Matrix idempotent;
  Matrix nilpotent;
  std::size_t nil_index;
};

struct HiranoCertificate {
  Matrix source;
  Matrix inverse;  // a^H
  Matrix tripotent;
  Matrix nilpotent;
  Matrix proj_zero;
  Matrix proj_one;
  Matrix proj_minus_one;
  std::size_t defect_index;  // minimal m with (a - a^3)^m = 0
};

// Multiplicities of the eigenvalues 0, 1, -1 in the characteristic
// polynomial, plus the cofactor left after dividing those roots out.
struct SpectrumSummary {
  std::size_t mult_zero;
  std::size_t mult_one;
  std::size_t mult_minus_one;
  Polynomial other_factor;
};

DrazinCertificate drazin(const Matrix& a);

// Present iff a - a^2 is nilpotent.
std::optional<StronglyDrazinCertificate> strongly_drazin(const Matrix& a);

// Minimal m with (a - a^3)^m = 0, empty when a - a^3 is not nilpotent.
std::optional<std::size_t> is_hirano(const Matrix& a);

// Requires is_hirano(a); throws Errc::not_hirano otherwise.
HiranoCertificate hirano(const Matrix& a);

SpectrumSummary spectrum_summary(const Matrix& a);

// (BA)^H = B [(AB)^H]^2 A; both routes computed and compared exactly.
Matrix cline_hirano(const Matrix& A, const Matrix& B);

// (a+b)^H under ab = 0; hypothesis checked before computing.
Matrix hirano_sum_orthogonal(const Matrix& a, const Matrix& b);

// (a+b)^H under aba = 0 and ab^2 = 0.
Matrix hirano_sum_225(const Matrix& a, const Matrix& b);

}  // namespace ginv
