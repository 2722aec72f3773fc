#include "theorems.hpp"

#include <functional>
#include <utility>

#include "error.hpp"

namespace ginv {

Matrix build_anti_triangular(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    fail(Errc::dimension_mismatch, "anti-triangular blocks must be square of equal size");
  const std::size_t n = a.rows();
  return block2x2(a, Matrix::identity(n), b, Matrix::zero(n, n));
}

PeirceBlocks peirce_split(const Matrix& x, const Matrix& e) {
  if (!x.is_square() || x.rows() != e.rows() || x.cols() != e.cols())
    fail(Errc::dimension_mismatch, "peirce_split shape mismatch");
  if (e * e != e) fail(Errc::not_idempotent, "e^2 != e");
  const Matrix f = Matrix::identity(e.rows()) - e;
  PeirceBlocks p{e * x * e, e * x * f, f * x * e, f * x * f, e};
  if (p.alpha + p.beta + p.gamma + p.delta != x)
    fail(Errc::verification_failure, "peirce blocks do not sum to x");
  return p;
}

namespace {

Hypothesis equation(std::string name, Matrix residual) {
  const bool ok = residual.is_zero();
  return Hypothesis{std::move(name), ok,
                    ok ? std::nullopt : std::optional<Matrix>(std::move(residual))};
}

Hypothesis member_hirano(const std::string& sym, const Matrix& m) {
  Matrix res = m - m * m * m;
  const bool ok = nilpotency_index(res).has_value();
  return Hypothesis{sym + " in A^H", ok,
                    ok ? std::nullopt : std::optional<Matrix>(std::move(res))};
}

Hypothesis member_sdrazin(const std::string& sym, const Matrix& m) {
  Matrix res = m - m * m;
  const bool ok = nilpotency_index(res).has_value();
  return Hypothesis{sym + " in A^sD", ok,
                    ok ? std::nullopt : std::optional<Matrix>(std::move(res))};
}

Hypothesis spectrum01(const std::string& sym, const Matrix& m) {
  SpectrumSummary s = spectrum_summary(m);
  const bool ok =
      s.mult_minus_one == 0 && s.other_factor == Polynomial::constant(Scalar(1));
  return Hypothesis{"eigenvalues of " + sym + " in {0, 1}", ok, std::nullopt};
}

struct Entry {
  std::vector<std::string> input_names;
  // Appends the hypothesis ledger and returns the conclusion matrix.
  std::function<Matrix(const std::map<std::string, Matrix>&, std::vector<Hypothesis>&)> run;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = [] {
    std::map<std::string, Entry> r;
    using In = std::map<std::string, Matrix>;
    using Hyps = std::vector<Hypothesis>;

    r["lem2.2"] = {{"a", "b", "c"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      h.push_back(member_hirano("a", a));
      h.push_back(member_hirano("b", b));
      return block2x2(a, c, Matrix::zero(b.rows(), a.cols()), b);
    }};
    r["lem2.4"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      h.push_back(member_hirano("a", a));
      h.push_back(member_hirano("b", b));
      h.push_back(equation("a b = 0", a * b));
      return a + b;
    }};
    r["thm2.5"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      h.push_back(member_hirano("a", a));
      h.push_back(member_hirano("b", b));
      h.push_back(equation("a b a = 0", a * b * a));
      h.push_back(equation("a b^2 = 0", a * b * b));
      return a + b;
    }};
    r["thm3.1"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      DrazinCertificate bd = drazin(b);
      h.push_back(member_hirano("a", a));
      h.push_back(member_sdrazin("b", b));
      h.push_back(equation("b^D a = 0", bd.inverse * a));
      h.push_back(equation("b a b^pi = 0", b * a * bd.spectral_idempotent));
      return build_anti_triangular(a, b);
    }};
    r["cor3.2"] = {{"a", "b", "c", "d"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b"), &c = in.at("c"), &d = in.at("d");
      DrazinCertificate bcd = drazin(b * c);
      h.push_back(member_hirano("a", a));
      h.push_back(member_hirano("d", d));
      h.push_back(member_sdrazin("bc", b * c));
      h.push_back(equation("(bc)^D a = 0", bcd.inverse * a));
      h.push_back(equation("b c a (bc)^pi = 0", b * c * a * bcd.spectral_idempotent));
      h.push_back(equation("b d c = 0", b * d * c));
      h.push_back(equation("b d^2 = 0", b * d * d));
      return block2x2(a, b, c, d);
    }};
    r["cor3.3"] = {{"a", "b", "c", "d"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b"), &c = in.at("c"), &d = in.at("d");
      DrazinCertificate bcd = drazin(b * c);
      h.push_back(member_hirano("a", a));
      h.push_back(member_hirano("d", d));
      h.push_back(member_sdrazin("bc", b * c));
      h.push_back(equation("(bc)^D a = 0", bcd.inverse * a));
      h.push_back(equation("a (bc)^pi = 0", a * bcd.spectral_idempotent));
      h.push_back(equation("b d = 0", b * d));
      return block2x2(a, b, c, d);
    }};
    r["thm3.5"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      DrazinCertificate bd = drazin(b);
      h.push_back(spectrum01("a", a));
      h.push_back(spectrum01("b", b));
      h.push_back(equation("b^D a = 0", bd.inverse * a));
      h.push_back(equation("b a b^pi = 0", b * a * bd.spectral_idempotent));
      return build_anti_triangular(a, b);
    }};
    r["thm4.1"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      DrazinCertificate bd = drazin(b);
      h.push_back(member_hirano("a", a));
      h.push_back(member_sdrazin("b", b));
      h.push_back(equation("b^D a = 0", bd.inverse * a));
      h.push_back(equation("a b b^pi = b a b^pi",
                           a * b * bd.spectral_idempotent - b * a * bd.spectral_idempotent));
      return build_anti_triangular(a, b);
    }};
    r["cor4.2"] = {{"a", "b", "c"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      DrazinCertificate cbd = drazin(c * b);
      h.push_back(member_hirano("a", a));
      h.push_back(member_sdrazin("cb", c * b));
      h.push_back(equation("a c b = c b a", a * c * b - c * b * a));
      h.push_back(equation("(cb)^D a = 0", cbd.inverse * a));
      return block2x2(a, c, b, Matrix::zero(b.rows(), c.cols()));
    }};
    r["cor4.3"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      DrazinCertificate bd = drazin(b);
      h.push_back(member_sdrazin("a", a));
      h.push_back(member_sdrazin("b", b));
      h.push_back(equation("b^D a = 0", bd.inverse * a));
      h.push_back(equation("a b = b a", a * b - b * a));
      return build_anti_triangular(a, b);
    }};
    r["thm4.4"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      h.push_back(member_hirano("a", a));
      h.push_back(member_sdrazin("b", b));
      h.push_back(equation("b = b a", b - b * a));
      return build_anti_triangular(a, b);
    }};
    r["cor4.5"] = {{"a", "b"}, [](const In& in, Hyps& h) {
      const Matrix &a = in.at("a"), &b = in.at("b");
      h.push_back(member_hirano("a", a));
      h.push_back(member_sdrazin("b", b));
      h.push_back(equation("b = a b", b - a * b));
      return build_anti_triangular(a, b);
    }};
    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, entry] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

const std::vector<std::string>& theorem_input_names(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) fail(Errc::unknown_theorem, "unknown theorem id: " + id);
  return it->second.input_names;
}

TheoremReport check_theorem(const std::string& id,
                            const std::map<std::string, Matrix>& inputs,
                            const std::string& disabled_hypothesis) {
  auto it = registry().find(id);
  if (it == registry().end()) fail(Errc::unknown_theorem, "unknown theorem id: " + id);
  const Entry& entry = it->second;

  std::size_t dim = 0;
  for (const auto& name : entry.input_names) {
    auto in = inputs.find(name);
    if (in == inputs.end()) fail(Errc::missing_input, id + ": missing input " + name);
    if (!in->second.is_square())
      fail(Errc::dimension_mismatch, id + ": input " + name + " must be square");
    if (dim == 0) dim = in->second.rows();
    if (in->second.rows() != dim)
      fail(Errc::dimension_mismatch, id + ": inputs must share one dimension");
  }

  TheoremReport report;
  report.theorem_id = id;
  report.inputs = inputs;

  std::vector<Hypothesis> hyps;
  Matrix conclusion = entry.run(inputs, hyps);
  if (!disabled_hypothesis.empty())
    std::erase_if(hyps, [&](const Hypothesis& h) { return h.name == disabled_hypothesis; });
  report.hypotheses = std::move(hyps);
  report.conclusion_matrix = conclusion;

  if (report.all_hypotheses_hold() && is_hirano(conclusion).has_value()) {
    report.certificate = hirano(conclusion);
    report.conclusion_verified = true;
  }
  return report;
}

}  // namespace ginv
