#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geninv.hpp"
#include "matrix.hpp"

namespace ginv {

// The 2n x 2n block matrix [[a, I], [b, 0]].
Matrix build_anti_triangular(const Matrix& a, const Matrix& b);

struct PeirceBlocks {
  Matrix alpha;  // e x e
  Matrix beta;   // e x (1-e)
  Matrix gamma;  // (1-e) x e
  Matrix delta;  // (1-e) x (1-e)
  Matrix idempotent;
};

PeirceBlocks peirce_split(const Matrix& x, const Matrix& e);

struct Hypothesis {
  std::string name;  // equation rendered as text
  bool holds;
  std::optional<Matrix> residual;  // present when violated and matrix-valued
};

struct TheoremReport {
  std::string theorem_id;
  std::map<std::string, Matrix> inputs;
  std::vector<Hypothesis> hypotheses;
  std::optional<Matrix> conclusion_matrix;
  bool conclusion_verified = false;
  std::optional<HiranoCertificate> certificate;

  bool all_hypotheses_hold() const {
    for (const auto& h : hypotheses)
      if (!h.holds) return false;
    return true;
  }
};

const std::vector<std::string>& theorem_ids();
const std::vector<std::string>& theorem_input_names(const std::string& id);

// Evaluates every hypothesis of the registry entry; when all hold, builds
// the conclusion matrix and certifies it Hirano. `disabled_hypothesis`
// drops one named hypothesis from the ledger (mutation self-tests only).
TheoremReport check_theorem(const std::string& id,
                            const std::map<std::string, Matrix>& inputs,
                            const std::string& disabled_hypothesis = "");

}  // namespace ginv
