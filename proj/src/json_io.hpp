#pragma once

#include <string>

#include <json.hpp>

#include "fuzz.hpp"
#include "geninv.hpp"
#include "matrix.hpp"
#include "theorems.hpp"

namespace ginv {

// Matrix wire format:
//   {"rows": n, "cols": m, "entries": [[s, ...], ...]}
// where s is a rational string "p" / "p/q" or {"re": ..., "im": ...}.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
// Parses text, reporting line/column on malformed input.
Matrix matrix_from_text(const std::string& text);

std::string scalar_to_string(const Scalar& s);  // "p/q" or "p/q+r/s*i"
Scalar scalar_from_string(const std::string& s);

nlohmann::json polynomial_to_json(const Polynomial& p);

nlohmann::json certificate_to_json(const DrazinCertificate& c);
nlohmann::json certificate_to_json(const StronglyDrazinCertificate& c);
nlohmann::json certificate_to_json(const HiranoCertificate& c);
nlohmann::json spectrum_to_json(const SpectrumSummary& s);
nlohmann::json peirce_to_json(const PeirceBlocks& p);
nlohmann::json report_to_json(const TheoremReport& r);
nlohmann::json report_to_json(const FuzzReport& r);

}  // namespace ginv
