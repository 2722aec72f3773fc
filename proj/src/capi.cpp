#include "ginv/ginv.h"

#include <cstring>
#include <string>

#include "error.hpp"
#include "fuzz.hpp"
#include "geninv.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "paper_examples.hpp"
#include "theorems.hpp"

struct ginv_matrix {
  ginv::Matrix value;
};

namespace {

thread_local std::string g_last_error = "no error";

ginv_status status_for(ginv::Errc code) {
  using ginv::Errc;
  switch (code) {
    case Errc::dimension_mismatch:
      return GINV_ERR_DIMENSION;
    case Errc::singular:
      return GINV_ERR_SINGULAR;
    case Errc::parse:
      return GINV_ERR_PARSE;
    case Errc::not_hirano:
      return GINV_ERR_NOT_HIRANO;
    case Errc::hypothesis_violated:
      return GINV_ERR_HYPOTHESIS;
    case Errc::unknown_theorem:
    case Errc::missing_input:
      return GINV_ERR_UNKNOWN_THEOREM;
    case Errc::non_coprime_moduli:
    case Errc::not_idempotent:
      return GINV_ERR_ARGUMENT;
    case Errc::verification_failure:
    case Errc::generation_exhausted:
      return GINV_ERR_INTERNAL;
  }
  return GINV_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ginv_status guarded(F&& f) {
  try {
    return f();
  } catch (const ginv::Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GINV_ERR_INTERNAL;
  }
}

ginv_status require(bool ok, const char* msg) {
  if (!ok) {
    g_last_error = msg;
    return GINV_ERR_ARGUMENT;
  }
  return GINV_OK;
}

}  // namespace

extern "C" {

const char* ginv_version(void) { return "1.0.0"; }

const char* ginv_last_error(void) { return g_last_error.c_str(); }

void ginv_string_free(char* s) { delete[] s; }

void ginv_matrix_free(ginv_matrix* m) { delete m; }

ginv_status ginv_matrix_from_json(const char* text, ginv_matrix** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] {
    *out = new ginv_matrix{ginv::matrix_from_text(text)};
    return GINV_OK;
  });
}

ginv_status ginv_matrix_to_json(const ginv_matrix* m, char** out) {
  if (auto st = require(m && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(ginv::matrix_to_json(m->value).dump());
    return GINV_OK;
  });
}

ginv_status ginv_drazin(const ginv_matrix* a, char** certificate_json) {
  if (auto st = require(a && certificate_json, "null argument")) return st;
  return guarded([&] {
    *certificate_json = dup_string(ginv::certificate_to_json(ginv::drazin(a->value)).dump());
    return GINV_OK;
  });
}

ginv_status ginv_strongly_drazin(const ginv_matrix* a, char** certificate_json) {
  if (auto st = require(a && certificate_json, "null argument")) return st;
  return guarded([&]() -> ginv_status {
    auto cert = ginv::strongly_drazin(a->value);
    if (!cert) {
      g_last_error = "a - a^2 is not nilpotent: no strongly Drazin inverse";
      return GINV_ERR_NOT_SDRAZIN;
    }
    *certificate_json = dup_string(ginv::certificate_to_json(*cert).dump());
    return GINV_OK;
  });
}

ginv_status ginv_hirano(const ginv_matrix* a, char** certificate_json) {
  if (auto st = require(a && certificate_json, "null argument")) return st;
  return guarded([&] {
    *certificate_json = dup_string(ginv::certificate_to_json(ginv::hirano(a->value)).dump());
    return GINV_OK;
  });
}

ginv_status ginv_spectrum(const ginv_matrix* a, char** summary_json) {
  if (auto st = require(a && summary_json, "null argument")) return st;
  return guarded([&] {
    *summary_json = dup_string(ginv::spectrum_to_json(ginv::spectrum_summary(a->value)).dump());
    return GINV_OK;
  });
}

ginv_status ginv_peirce(const ginv_matrix* x, const ginv_matrix* e, char** blocks_json) {
  if (auto st = require(x && e && blocks_json, "null argument")) return st;
  return guarded([&] {
    *blocks_json = dup_string(ginv::peirce_to_json(ginv::peirce_split(x->value, e->value)).dump());
    return GINV_OK;
  });
}

ginv_status ginv_theorem_ids(char** csv) {
  if (auto st = require(csv != nullptr, "null argument")) return st;
  return guarded([&] {
    std::string out;
    for (const auto& id : ginv::theorem_ids()) {
      if (!out.empty()) out += ",";
      out += id;
    }
    *csv = dup_string(out);
    return GINV_OK;
  });
}

ginv_status ginv_theorem_input_names(const char* theorem_id, char** csv) {
  if (auto st = require(theorem_id && csv, "null argument")) return st;
  return guarded([&] {
    std::string out;
    for (const auto& name : ginv::theorem_input_names(theorem_id)) {
      if (!out.empty()) out += ",";
      out += name;
    }
    *csv = dup_string(out);
    return GINV_OK;
  });
}

ginv_status ginv_check_theorem(const char* theorem_id, const char* const* input_names,
                               const ginv_matrix* const* inputs, size_t input_count,
                               char** report_json) {
  if (auto st = require(theorem_id && input_names && inputs && report_json, "null argument"))
    return st;
  return guarded([&]() -> ginv_status {
    std::map<std::string, ginv::Matrix> in;
    for (size_t k = 0; k < input_count; ++k) {
      if (auto st = require(input_names[k] && inputs[k], "null input entry")) return st;
      in.emplace(input_names[k], inputs[k]->value);
    }
    ginv::TheoremReport r = ginv::check_theorem(theorem_id, in);
    *report_json = dup_string(ginv::report_to_json(r).dump());
    if (!r.all_hypotheses_hold()) {
      g_last_error = "one or more hypotheses are violated";
      return GINV_ERR_HYPOTHESIS;
    }
    if (!r.conclusion_verified) {
      g_last_error = "hypotheses hold but the conclusion failed verification";
      return GINV_ERR_CONCLUSION;
    }
    return GINV_OK;
  });
}

ginv_status ginv_fuzz(const char* theorem_id, size_t dim, uint64_t seed, long entry_bound,
                      size_t trials, const char* disabled_hypothesis, char** report_json) {
  if (auto st = require(theorem_id && report_json, "null argument")) return st;
  if (auto st = require(dim >= 1 && trials >= 1 && entry_bound >= 1,
                        "dim, trials, entry_bound must all be >= 1"))
    return st;
  return guarded([&]() -> ginv_status {
    ginv::GenSpec spec{theorem_id, dim, seed, entry_bound, trials};
    ginv::FuzzReport r =
        ginv::run_fuzz(spec, disabled_hypothesis ? disabled_hypothesis : "");
    *report_json = dup_string(ginv::report_to_json(r).dump());
    if (!r.failures.empty()) {
      g_last_error = "fuzz campaign found conclusion failures";
      return GINV_ERR_CONCLUSION;
    }
    return GINV_OK;
  });
}

ginv_status ginv_paper_examples(int tamper, char** report_json) {
  if (auto st = require(report_json != nullptr, "null argument")) return st;
  return guarded([&]() -> ginv_status {
    auto reports = ginv::run_paper_examples(tamper != 0);
    nlohmann::json out = nlohmann::json::array();
    bool all_ok = true;
    for (const auto& rep : reports) {
      nlohmann::json claims = nlohmann::json::array();
      for (const auto& c : rep.claims)
        claims.push_back({{"text", c.text}, {"verified", c.verified}});
      out.push_back({{"example", rep.example_id},
                     {"claims", std::move(claims)},
                     {"discrepancies", rep.discrepancies},
                     {"ok", rep.ok()}});
      all_ok = all_ok && rep.ok();
    }
    *report_json = dup_string(out.dump());
    if (!all_ok) {
      g_last_error = "a worked-example regression failed";
      return GINV_ERR_CONCLUSION;
    }
    return GINV_OK;
  });
}

}  // extern "C"
