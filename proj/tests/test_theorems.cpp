#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "error.hpp"
#include "fuzz.hpp"
#include "paper_examples.hpp"
#include "theorems.hpp"

using namespace ginv;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a ginv::Error");
  return Errc::verification_failure;
}
}  // namespace

TEST_CASE("build_anti_triangular matches the printed block matrix") {
  Matrix built = build_anti_triangular(fixtures::ex52_a(), fixtures::ex52_b());
  CHECK(built == fixtures::ex52_block());

  Matrix m = build_anti_triangular(fixtures::ex36_a(), fixtures::ex36_b());
  CHECK(m == Matrix{{1, 1, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}});

  CHECK(code_of([] {
          build_anti_triangular(Matrix::identity(2), Matrix::identity(3));
        }) == Errc::dimension_mismatch);
}

TEST_CASE("peirce decomposition") {
  Matrix x{{1, 2}, {3, 4}};
  Matrix e{{1, 0}, {0, 0}};
  PeirceBlocks p = peirce_split(x, e);
  CHECK(p.alpha == Matrix{{1, 0}, {0, 0}});
  CHECK(p.beta == Matrix{{0, 2}, {0, 0}});
  CHECK(p.gamma == Matrix{{0, 0}, {3, 0}});
  CHECK(p.delta == Matrix{{0, 0}, {0, 4}});

  PeirceBlocks full = peirce_split(x, Matrix::identity(2));
  CHECK(full.alpha == x);
  CHECK(full.beta.is_zero());
  CHECK(full.gamma.is_zero());
  CHECK(full.delta.is_zero());

  PeirceBlocks none = peirce_split(x, Matrix::zero(2, 2));
  CHECK(none.delta == x);
  CHECK(none.alpha.is_zero());

  CHECK(code_of([&] { peirce_split(x, x); }) == Errc::not_idempotent);
}

TEST_CASE("off-diagonal peirce parts square into the corners") {
  Rng rng(61);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 2 + rng.below(3);
    Matrix x = random_matrix(n, n, rng, 3);
    // random idempotent: conjugated coordinate projection
    auto [s, sinv] = random_similarity(n, rng, 2);
    Matrix e0(n, n);
    std::size_t r = 1 + rng.below(n - 1);
    for (std::size_t i = 0; i < r; ++i) e0.set(i, i, Scalar(1));
    Matrix e = s * e0 * sinv;
    REQUIRE(e * e == e);
    PeirceBlocks p = peirce_split(x, e);
    Matrix off = p.beta + p.gamma;
    // (beta + gamma)^2 = beta gamma + gamma beta: the cross terms vanish
    CHECK(off * off == p.beta * p.gamma + p.gamma * p.beta);
    CHECK((p.beta * p.beta).is_zero());
    CHECK((p.gamma * p.gamma).is_zero());
    CHECK(p.alpha + off + p.delta == x);
  }
}

TEST_CASE("anti-triangular split against the spectral idempotent of b") {
  // For M = [[a, I], [b, 0]] with the idempotent pair, split along
  // E = diag(b b^D, b b^D): the complement part collects b^pi blocks.
  Matrix a = fixtures::ex52_a(), b = fixtures::ex52_b();
  DrazinCertificate bd = drazin(b);
  Matrix e2 = b * bd.inverse;
  Matrix E = block2x2(e2, Matrix::zero(2, 2), Matrix::zero(2, 2), e2);
  Matrix M = build_anti_triangular(a, b);
  PeirceBlocks p = peirce_split(M, E);
  Matrix bpi = bd.spectral_idempotent;
  // with b^D a = 0 the non-corner parts condense to [[b^pi a, b^pi], [b b^pi, 0]]
  CHECK(p.beta + p.gamma + p.delta ==
        block2x2(bpi * a, bpi, b * bpi, Matrix::zero(2, 2)));
  CHECK(p.alpha + p.beta + p.gamma + p.delta == M);
  // the off-corner sum is nilpotent, the key step of the proof
  CHECK(nilpotency_index(p.beta + p.gamma).has_value());
}

TEST_CASE("registry lists all twelve statements") {
  const auto& ids = theorem_ids();
  CHECK(ids.size() == 12);
  for (const char* id : {"lem2.2", "lem2.4", "thm2.5", "thm3.1", "cor3.2", "cor3.3",
                         "thm3.5", "thm4.1", "cor4.2", "cor4.3", "thm4.4", "cor4.5"}) {
    CAPTURE(id);
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(!theorem_input_names(id).empty());
  }
  CHECK(code_of([] { theorem_input_names("thm9.9"); }) == Errc::unknown_theorem);
}

TEST_CASE("check_theorem on the worked anti-triangular pairs") {
  TheoremReport r36 = check_theorem(
      "thm3.1", {{"a", fixtures::ex36_a()}, {"b", fixtures::ex36_b()}});
  CHECK(r36.all_hypotheses_hold());
  CHECK(r36.conclusion_verified);
  REQUIRE(r36.certificate.has_value());
  CHECK(oracle_verify_hirano(*r36.conclusion_matrix, r36.certificate->inverse));

  TheoremReport r52 = check_theorem(
      "thm3.1", {{"a", fixtures::ex52_a()}, {"b", fixtures::ex52_b()}});
  CHECK(r52.conclusion_verified);
  CHECK(*r52.conclusion_matrix == fixtures::ex52_block());

  TheoremReport r53 = check_theorem(
      "thm4.1", {{"a", fixtures::ex53_a()}, {"b", fixtures::ex53_b()}});
  CHECK(r53.conclusion_verified);

  // 3.5 subsumes the same pair with the {0,1} spectrum reading
  TheoremReport r35 = check_theorem(
      "thm3.5", {{"a", fixtures::ex52_a()}, {"b", fixtures::ex52_b()}});
  CHECK(r35.all_hypotheses_hold());
  CHECK(r35.conclusion_verified);
}

TEST_CASE("check_theorem flags violated hypotheses with residuals") {
  TheoremReport r = check_theorem(
      "thm3.1", {{"a", Matrix::identity(2)}, {"b", Matrix::identity(2)}});
  CHECK(!r.all_hypotheses_hold());
  CHECK(!r.conclusion_verified);
  CHECK(!r.certificate.has_value());
  bool found = false;
  for (const auto& h : r.hypotheses) {
    if (h.name == "b^D a = 0") {
      found = true;
      CHECK(!h.holds);
      REQUIRE(h.residual.has_value());
      CHECK(*h.residual == Matrix::identity(2));
    }
  }
  CHECK(found);
}

TEST_CASE("disabling a hypothesis removes it from the ledger") {
  TheoremReport r = check_theorem(
      "thm3.1", {{"a", Matrix::identity(2)}, {"b", Matrix::identity(2)}}, "b^D a = 0");
  for (const auto& h : r.hypotheses) CHECK(h.name != "b^D a = 0");
  CHECK(r.all_hypotheses_hold());   // the only violated one was dropped
  CHECK(!r.conclusion_verified);    // and the conclusion genuinely fails
  CHECK(!r.certificate.has_value());
}

TEST_CASE("small fixed instances across the registry") {
  Matrix nil{{0, 1}, {0, 0}};
  Matrix idem{{1, 0}, {0, 0}};

  TheoremReport c43 = check_theorem("cor4.3", {{"a", nil}, {"b", nil}});
  CHECK(c43.all_hypotheses_hold());
  CHECK(c43.conclusion_verified);

  TheoremReport l24 = check_theorem(
      "lem2.4", {{"a", idem}, {"b", Matrix{{0, 0}, {1, 0}}}});
  CHECK(l24.all_hypotheses_hold());
  CHECK(l24.conclusion_verified);
  CHECK(*l24.conclusion_matrix == Matrix{{1, 0}, {1, 0}});

  TheoremReport t25 = check_theorem("thm2.5", {{"a", idem}, {"b", nil}});
  CHECK(t25.all_hypotheses_hold());
  CHECK(t25.conclusion_verified);

  TheoremReport l22 = check_theorem(
      "lem2.2", {{"a", idem}, {"b", nil}, {"c", Matrix{{2, 3}, {4, 5}}}});
  CHECK(l22.all_hypotheses_hold());
  CHECK(l22.conclusion_verified);
  CHECK(l22.conclusion_matrix->rows() == 4);

  TheoremReport t44 = check_theorem("thm4.4", {{"a", Matrix::identity(2)}, {"b", nil}});
  CHECK(t44.all_hypotheses_hold());
  CHECK(t44.conclusion_verified);

  TheoremReport c45 = check_theorem("cor4.5", {{"a", Matrix::identity(2)}, {"b", nil}});
  CHECK(c45.all_hypotheses_hold());
  CHECK(c45.conclusion_verified);

  Matrix one{{1}};
  Matrix zero1{{0}};
  TheoremReport c32 = check_theorem(
      "cor3.2", {{"a", zero1}, {"b", one}, {"c", one}, {"d", zero1}});
  CHECK(c32.all_hypotheses_hold());
  CHECK(c32.conclusion_verified);
  CHECK(*c32.conclusion_matrix == Matrix{{0, 1}, {1, 0}});

  TheoremReport c33 = check_theorem(
      "cor3.3", {{"a", zero1}, {"b", one}, {"c", one}, {"d", zero1}});
  CHECK(c33.all_hypotheses_hold());
  CHECK(c33.conclusion_verified);

  TheoremReport c42 = check_theorem(
      "cor4.2", {{"a", zero1}, {"b", one}, {"c", one}});
  CHECK(c42.all_hypotheses_hold());
  CHECK(c42.conclusion_verified);
}

TEST_CASE("printed b = ba statement fails when b has an invertible part") {
  // a = 1, b = 1 meets every stated hypothesis of the b = ba result, yet
  // [[1,1],[1,0]] has characteristic polynomial l^2 - l - 1. The checker
  // must report the clean ledger together with the failed conclusion.
  TheoremReport r = check_theorem("thm4.4", {{"a", Matrix{{1}}}, {"b", Matrix{{1}}}});
  CHECK(r.all_hypotheses_hold());
  CHECK(!r.conclusion_verified);
  CHECK(!r.certificate.has_value());
  CHECK(*r.conclusion_matrix == Matrix{{1, 1}, {1, 0}});

  TheoremReport r45 = check_theorem("cor4.5", {{"a", Matrix{{1}}}, {"b", Matrix{{1}}}});
  CHECK(r45.all_hypotheses_hold());
  CHECK(!r45.conclusion_verified);
}

TEST_CASE("input validation") {
  CHECK(code_of([] { check_theorem("nope", {}); }) == Errc::unknown_theorem);
  CHECK(code_of([] {
          check_theorem("thm3.1", {{"a", Matrix::identity(2)}});
        }) == Errc::missing_input);
  CHECK(code_of([] {
          check_theorem("thm3.1",
                        {{"a", Matrix::identity(2)}, {"b", Matrix::identity(3)}});
        }) == Errc::dimension_mismatch);
  CHECK(code_of([] {
          check_theorem("thm3.1", {{"a", Matrix::zero(2, 3)}, {"b", Matrix::identity(2)}});
        }) == Errc::dimension_mismatch);
}
