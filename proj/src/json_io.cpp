#include "json_io.hpp"

#include <regex>

#include "error.hpp"

namespace ginv {

namespace {

const std::regex kRationalRe("^-?[0-9]+(/[1-9][0-9]*)?$");

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s, const std::string& where) {
  if (!std::regex_match(s, kRationalRe))
    fail(Errc::parse, "malformed rational '" + s + "' " + where);
  mpq_class q(s);
  q.canonicalize();
  return q;
}

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return rational_str(s.re());
  return nlohmann::json{{"re", rational_str(s.re())}, {"im", rational_str(s.im())}};
}

Scalar scalar_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>(), where));
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im") || !j["re"].is_string() ||
        !j["im"].is_string())
      fail(Errc::parse, "complex entry needs string fields re and im " + where);
    return Scalar(rational_from_string(j["re"].get<std::string>(), where),
                  rational_from_string(j["im"].get<std::string>(), where));
  }
  fail(Errc::parse, "entry must be a rational string or {re, im} object " + where);
}

}  // namespace

std::string scalar_to_string(const Scalar& s) { return s.str(); }

Scalar scalar_from_string(const std::string& s) {
  auto star = s.find("*i");
  if (star == std::string::npos) return Scalar(rational_from_string(s, "(scalar)"));
  // split "re+im*i" / "re-im*i" at the sign starting the imaginary part
  std::string head = s.substr(0, star);
  std::size_t split = head.find_last_of("+-");
  if (split == std::string::npos || split == 0)
    fail(Errc::parse, "malformed complex scalar '" + s + "'");
  if (head[split - 1] == '/') fail(Errc::parse, "malformed complex scalar '" + s + "'");
  std::string im = head.substr(split);
  if (im[0] == '+') im = im.substr(1);
  return Scalar(rational_from_string(head.substr(0, split), "(scalar)"),
                rational_from_string(im, "(scalar)"));
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    fail(Errc::parse, "matrix object needs rows, cols, entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    fail(Errc::parse, "rows and cols must be positive counts");
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) fail(Errc::parse, "rows and cols must be positive counts");
  const auto& grid = j["entries"];
  if (!grid.is_array() || grid.size() != rows)
    fail(Errc::parse, "entries grid has " + std::to_string(grid.size()) +
                          " rows, expected " + std::to_string(rows));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!grid[i].is_array() || grid[i].size() != cols)
      fail(Errc::parse, "row " + std::to_string(i + 1) + " has " +
                            std::to_string(grid[i].size()) + " entries, expected " +
                            std::to_string(cols));
    for (std::size_t jj = 0; jj < cols; ++jj)
      m.set(i, jj, scalar_from_json(grid[i][jj], "(row " + std::to_string(i + 1) +
                                                     ", column " + std::to_string(jj + 1) + ")"));
  }
  return m;
}

Matrix matrix_from_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // translate the byte offset into a line/column diagnostic
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(Errc::parse, "JSON syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
  }
  return matrix_from_json(j);
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& v : p.coeffs()) c.push_back(scalar_to_json(v));
  return c;
}

nlohmann::json certificate_to_json(const DrazinCertificate& c) {
  return {{"source", matrix_to_json(c.source)},
          {"inverse", matrix_to_json(c.inverse)},
          {"index", c.index},
          {"spectral_idempotent", matrix_to_json(c.spectral_idempotent)},
          {"core", matrix_to_json(c.core)},
          {"nil_part", matrix_to_json(c.nil_part)}};
}

nlohmann::json certificate_to_json(const StronglyDrazinCertificate& c) {
  return {{"source", matrix_to_json(c.source)},
          {"inverse", matrix_to_json(c.inverse)},
          {"idempotent", matrix_to_json(c.idempotent)},
          {"nilpotent", matrix_to_json(c.nilpotent)},
          {"nil_index", c.nil_index}};
}

nlohmann::json certificate_to_json(const HiranoCertificate& c) {
  return {{"source", matrix_to_json(c.source)},
          {"inverse", matrix_to_json(c.inverse)},
          {"tripotent", matrix_to_json(c.tripotent)},
          {"nilpotent", matrix_to_json(c.nilpotent)},
          {"proj_zero", matrix_to_json(c.proj_zero)},
          {"proj_one", matrix_to_json(c.proj_one)},
          {"proj_minus_one", matrix_to_json(c.proj_minus_one)},
          {"defect_index", c.defect_index}};
}

nlohmann::json spectrum_to_json(const SpectrumSummary& s) {
  return {{"mult_zero", s.mult_zero},
          {"mult_one", s.mult_one},
          {"mult_minus_one", s.mult_minus_one},
          {"other_factor", polynomial_to_json(s.other_factor)}};
}

nlohmann::json peirce_to_json(const PeirceBlocks& p) {
  return {{"alpha", matrix_to_json(p.alpha)},
          {"beta", matrix_to_json(p.beta)},
          {"gamma", matrix_to_json(p.gamma)},
          {"delta", matrix_to_json(p.delta)},
          {"idempotent", matrix_to_json(p.idempotent)}};
}

nlohmann::json report_to_json(const TheoremReport& r) {
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : r.hypotheses) {
    nlohmann::json e{{"name", h.name}, {"holds", h.holds}};
    if (h.residual) e["residual"] = matrix_to_json(*h.residual);
    hyps.push_back(std::move(e));
  }
  nlohmann::json out{{"theorem", r.theorem_id},
                     {"hypotheses", std::move(hyps)},
                     {"conclusion_verified", r.conclusion_verified}};
  if (r.certificate) {
    out["defect_index"] = r.certificate->defect_index;
    out["certificate"] = certificate_to_json(*r.certificate);
  }
  if (r.conclusion_matrix) out["conclusion_matrix"] = matrix_to_json(*r.conclusion_matrix);
  return out;
}

nlohmann::json report_to_json(const FuzzReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json inputs;
    for (const auto& [name, m] : f.report.inputs) inputs[name] = matrix_to_json(m);
    failures.push_back({{"trial", f.trial},
                        {"inputs", std::move(inputs)},
                        {"report", report_to_json(f.report)}});
  }
  return {{"spec",
           {{"theorem", r.spec.theorem_id},
            {"dim", r.spec.dim},
            {"seed", r.spec.seed},
            {"entry_bound", r.spec.entry_bound},
            {"trials", r.spec.trials}}},
          {"passed", r.passed},
          {"hypothesis_rejections", r.hypothesis_rejections},
          {"failures", std::move(failures)}};
}

}  // namespace ginv
