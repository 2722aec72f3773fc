#include "paper_examples.hpp"

#include "fuzz.hpp"
#include "geninv.hpp"
#include "polynomial.hpp"
#include "theorems.hpp"

namespace ginv {

namespace fixtures {

Matrix ex36_a() { return Matrix{{1, 1}, {0, 0}}; }
Matrix ex36_b() { return Matrix{{0, 1}, {0, 1}}; }
Matrix ex51_a() { return Matrix{{0, 0, 1}, {1, 0, 1}, {1, 0, 0}}; }
Matrix ex51_printed_tripotent() { return Matrix{{0, 0, 1}, {1, 0, 0}, {1, 0, 0}}; }
Matrix ex51_printed_nilpotent() { return Matrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}; }
Matrix ex52_a() { return Matrix{{0, 0}, {0, 1}}; }
Matrix ex52_b() { return Matrix{{1, 0}, {1, 0}}; }
Matrix ex52_block() {
  return Matrix{{0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}};
}
Matrix ex53_a() { return Matrix{{0, 0}, {0, 1}}; }
Matrix ex53_b() { return Matrix{{1, 0}, {-1, 0}}; }

}  // namespace fixtures

namespace {

ExampleReport run_anti_triangular_example(const std::string& id, const std::string& theorem,
                                          const Matrix& a, const Matrix& b) {
  ExampleReport rep{id, {}, {}};
  TheoremReport tr = check_theorem(theorem, {{"a", a}, {"b", b}});
  rep.claims.push_back({theorem + " hypothesis ledger all true", tr.all_hypotheses_hold()});
  rep.claims.push_back({"block matrix certified Hirano", tr.conclusion_verified});
  bool oracle_ok = tr.certificate.has_value() &&
                   oracle_verify_hirano(*tr.conclusion_matrix, tr.certificate->inverse);
  rep.claims.push_back({"certificate agrees with the axiom oracle", oracle_ok});
  bool defect_ok = tr.certificate.has_value() && tr.certificate->defect_index <= 8;
  rep.claims.push_back({"defect index recorded and at most 8", defect_ok});
  return rep;
}

}  // namespace

std::vector<ExampleReport> run_paper_examples(bool tamper) {
  std::vector<ExampleReport> out;

  // [[a, I], [b, 0]] from the idempotent pair; char poly l(l+1)(l-1)^2.
  {
    Matrix a = fixtures::ex36_a();
    if (tamper) a.set(0, 0, Scalar(2));  // pushes an eigenvalue outside {-1,0,1}
    Matrix b = fixtures::ex36_b();
    ExampleReport rep = run_anti_triangular_example("3.6", "thm3.1", a, b);
    Matrix m = build_anti_triangular(a, b);
    Polynomial expected({Scalar(0), Scalar(1), Scalar(-1), Scalar(-1), Scalar(1)});
    rep.claims.insert(rep.claims.begin(),
                      {"char poly of the block matrix is l^4 - l^3 - l^2 + l",
                       char_poly(m) == expected});
    out.push_back(std::move(rep));
  }

  // A^3 = A, so A is itself tripotent; the printed split is checked as text.
  {
    ExampleReport rep{"5.1", {}, {}};
    Matrix a = fixtures::ex51_a();
    rep.claims.push_back({"A^3 = A", a.pow(3) == a});
    HiranoCertificate cert = hirano(a);
    rep.claims.push_back({"hirano(A) returns tripotent part A and nilpotent part 0",
                          cert.tripotent == a && cert.nilpotent.is_zero()});
    rep.claims.push_back({"A^H = A", cert.inverse == a});
    Matrix bp = fixtures::ex51_printed_tripotent();
    Matrix cp = fixtures::ex51_printed_nilpotent();
    rep.claims.push_back({"printed B is tripotent and printed C is nilpotent",
                          bp.pow(3) == bp && nilpotency_index(cp).has_value()});
    rep.claims.push_back({"printed B + C = A", bp + cp == a});
    bool noncommuting = (bp * cp).is_zero() && !(cp * bp).is_zero();
    rep.claims.push_back({"printed split does not commute (BC = 0, CB != 0)", noncommuting});
    rep.discrepancies.push_back(
        "the printed decomposition A = B + C has BC = 0 but CB != 0, so it is not a "
        "commuting tripotent+nilpotent split; A^3 = A makes A itself the tripotent part");
    out.push_back(std::move(rep));
  }

  {
    ExampleReport rep =
        run_anti_triangular_example("5.2", "thm3.1", fixtures::ex52_a(), fixtures::ex52_b());
    Matrix built = build_anti_triangular(fixtures::ex52_a(), fixtures::ex52_b());
    rep.claims.insert(rep.claims.begin(),
                      {"built block matrix matches the printed 4x4",
                       built == fixtures::ex52_block()});
    out.push_back(std::move(rep));
  }

  out.push_back(
      run_anti_triangular_example("5.3", "thm4.1", fixtures::ex53_a(), fixtures::ex53_b()));

  return out;
}

}  // namespace ginv
