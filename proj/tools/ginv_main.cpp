// Command-line front end; talks to the core exclusively through the C API.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginv/ginv.h"

namespace {

using nlohmann::json;

int exit_code_for(ginv_status st) {
  switch (st) {
    case GINV_OK:
      return 0;
    case GINV_ERR_HYPOTHESIS:
    case GINV_ERR_NOT_HIRANO:
    case GINV_ERR_NOT_SDRAZIN:
      return 1;
    case GINV_ERR_CONCLUSION:
      return 2;
    case GINV_ERR_PARSE:
    case GINV_ERR_DIMENSION:
    case GINV_ERR_SINGULAR:
    case GINV_ERR_UNKNOWN_THEOREM:
    case GINV_ERR_ARGUMENT:
      return 3;
    case GINV_ERR_INTERNAL:
      return 4;
  }
  return 4;
}

struct MatrixHandle {
  ginv_matrix* ptr = nullptr;
  MatrixHandle() = default;
  MatrixHandle(MatrixHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  MatrixHandle& operator=(MatrixHandle&& o) noexcept {
    std::swap(ptr, o.ptr);
    return *this;
  }
  MatrixHandle(const MatrixHandle&) = delete;
  MatrixHandle& operator=(const MatrixHandle&) = delete;
  ~MatrixHandle() { ginv_matrix_free(ptr); }
};

struct StringOut {
  char* ptr = nullptr;
  StringOut() = default;
  StringOut(const StringOut&) = delete;
  StringOut& operator=(const StringOut&) = delete;
  ~StringOut() { ginv_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

[[noreturn]] void die(ginv_status st) {
  std::cerr << "error: " << ginv_last_error() << "\n";
  std::exit(exit_code_for(st));
}

MatrixHandle load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(3);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  MatrixHandle h;
  if (ginv_status st = ginv_matrix_from_json(buf.str().c_str(), &h.ptr)) die(st);
  return h;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(output_path);
    out << text;
  }
}

std::string entry_str(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  std::string im = e.at("im").get<std::string>();
  std::string out = e.at("re").get<std::string>();
  if (im[0] != '-') out += "+";
  return out + im + "*i";
}

std::string matrix_text(const json& m, const std::string& indent = "  ") {
  std::ostringstream out;
  for (const auto& row : m.at("entries")) {
    out << indent << "[";
    bool first = true;
    for (const auto& e : row) {
      if (!first) out << ", ";
      out << entry_str(e);
      first = false;
    }
    out << "]\n";
  }
  return out.str();
}

std::string certificate_text(const json& c) {
  std::ostringstream out;
  static const char* matrix_fields[] = {"source",    "inverse",    "spectral_idempotent",
                                        "core",      "nil_part",   "idempotent",
                                        "nilpotent", "tripotent",  "proj_zero",
                                        "proj_one",  "proj_minus_one"};
  static const char* count_fields[] = {"index", "nil_index", "defect_index"};
  for (const char* f : matrix_fields)
    if (c.contains(f)) out << f << ":\n" << matrix_text(c.at(f));
  for (const char* f : count_fields)
    if (c.contains(f)) out << f << ": " << c.at(f).get<std::size_t>() << "\n";
  return out.str();
}

std::string report_text(const json& r) {
  std::ostringstream out;
  out << "theorem " << r.at("theorem").get<std::string>() << "\n";
  for (const auto& h : r.at("hypotheses")) {
    out << (h.at("holds").get<bool>() ? "  [ ok ] " : "  [FAIL] ")
        << h.at("name").get<std::string>() << "\n";
    if (h.contains("residual")) out << "    residual:\n" << matrix_text(h.at("residual"), "      ");
  }
  out << (r.at("conclusion_verified").get<bool>() ? "  conclusion: verified Hirano"
                                                  : "  conclusion: NOT verified");
  if (r.contains("defect_index"))
    out << " (defect index " << r.at("defect_index").get<std::size_t>() << ")";
  out << "\n";
  return out.str();
}

int run_simple(const std::string& input, const std::string& format,
               const std::string& output,
               ginv_status (*fn)(const ginv_matrix*, char**)) {
  MatrixHandle m = load_matrix(input);
  StringOut s;
  if (ginv_status st = fn(m.ptr, &s.ptr)) die(st);
  if (format == "json")
    emit(s.str(), output);
  else
    emit(certificate_text(json::parse(s.str())), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Drazin / strongly Drazin / Hirano inverses over Q(i)"};
  app.require_subcommand(1);

  std::string input, output, format = "text";
  std::string theorem;
  std::string in_a, in_b, in_c, in_d;
  std::size_t dim = 2, trials = 100;
  std::uint64_t seed = 0;
  long entry_bound = 3;
  std::string disabled_hypothesis;
  bool tamper = false;

  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("-i,--input", input, "matrix JSON file")->required();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output", output, "write the result to a file");
  };

  auto* cmd_drazin = app.add_subcommand("drazin", "Drazin inverse certificate");
  add_io(cmd_drazin, true);
  auto* cmd_sdrazin = app.add_subcommand("sdrazin", "strongly Drazin inverse certificate");
  add_io(cmd_sdrazin, true);
  auto* cmd_hirano = app.add_subcommand("hirano", "Hirano inverse certificate");
  add_io(cmd_hirano, true);
  auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalue multiplicities at -1, 0, 1");
  add_io(cmd_spectrum, true);

  std::string idem_path;
  auto* cmd_decompose = app.add_subcommand("decompose", "Peirce decomposition for an idempotent");
  add_io(cmd_decompose, true);
  cmd_decompose->add_option("-e,--idempotent", idem_path, "idempotent matrix JSON file")
      ->required();

  auto* cmd_check = app.add_subcommand("check", "verify a theorem instance");
  cmd_check->add_option("--theorem", theorem, "registry id, e.g. thm3.1")->required();
  cmd_check->add_option("--a", in_a, "matrix file for input a");
  cmd_check->add_option("--b", in_b, "matrix file for input b");
  cmd_check->add_option("--c", in_c, "matrix file for input c");
  cmd_check->add_option("--d", in_d, "matrix file for input d");
  add_io(cmd_check, false);

  auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded theorem fuzz campaign");
  cmd_fuzz->add_option("--theorem", theorem, "registry id")->required();
  cmd_fuzz->add_option("--dim", dim, "block dimension");
  cmd_fuzz->add_option("--trials", trials, "number of trials");
  cmd_fuzz->add_option("--seed", seed, "campaign seed");
  cmd_fuzz->add_option("--entry-bound", entry_bound, "max |numerator| and denominator");
  cmd_fuzz->add_option("--disable-hypothesis", disabled_hypothesis,
                       "drop one named hypothesis (harness self-test)");
  add_io(cmd_fuzz, false);

  auto* cmd_paper = app.add_subcommand("paper-examples", "run the worked-example regressions");
  cmd_paper->add_flag("--self-test-tamper", tamper,
                      "corrupt a fixture to prove the harness notices");
  add_io(cmd_paper, false);

  CLI11_PARSE(app, argc, argv);

  if (cmd_drazin->parsed()) return run_simple(input, format, output, ginv_drazin);
  if (cmd_sdrazin->parsed()) return run_simple(input, format, output, ginv_strongly_drazin);
  if (cmd_hirano->parsed()) return run_simple(input, format, output, ginv_hirano);

  if (cmd_spectrum->parsed()) {
    MatrixHandle m = load_matrix(input);
    StringOut s;
    if (ginv_status st = ginv_spectrum(m.ptr, &s.ptr)) die(st);
    if (format == "json") {
      emit(s.str(), output);
    } else {
      json j = json::parse(s.str());
      std::ostringstream out;
      out << "mult(0) = " << j.at("mult_zero").get<std::size_t>()
          << ", mult(1) = " << j.at("mult_one").get<std::size_t>()
          << ", mult(-1) = " << j.at("mult_minus_one").get<std::size_t>()
          << ", other factor degree = "
          << static_cast<long>(j.at("other_factor").size()) - 1 << "\n";
      emit(out.str(), output);
    }
    return 0;
  }

  if (cmd_decompose->parsed()) {
    MatrixHandle x = load_matrix(input);
    MatrixHandle e = load_matrix(idem_path);
    StringOut s;
    if (ginv_status st = ginv_peirce(x.ptr, e.ptr, &s.ptr)) die(st);
    if (format == "json") {
      emit(s.str(), output);
    } else {
      json j = json::parse(s.str());
      std::ostringstream out;
      for (const char* f : {"alpha", "beta", "gamma", "delta"})
        out << f << ":\n" << matrix_text(j.at(f));
      emit(out.str(), output);
    }
    return 0;
  }

  if (cmd_check->parsed()) {
    StringOut names_csv;
    if (ginv_status st = ginv_theorem_input_names(theorem.c_str(), &names_csv.ptr)) die(st);
    std::vector<std::string> names;
    std::stringstream ss(names_csv.str());
    for (std::string item; std::getline(ss, item, ',');) names.push_back(item);

    std::vector<MatrixHandle> handles(names.size());
    std::vector<const char*> name_ptrs;
    std::vector<const ginv_matrix*> mat_ptrs;
    for (std::size_t k = 0; k < names.size(); ++k) {
      const std::string* path = nullptr;
      if (names[k] == "a") path = &in_a;
      if (names[k] == "b") path = &in_b;
      if (names[k] == "c") path = &in_c;
      if (names[k] == "d") path = &in_d;
      if (!path || path->empty()) {
        std::cerr << "error: theorem " << theorem << " needs --" << names[k] << "\n";
        return 3;
      }
      handles[k] = load_matrix(*path);
      name_ptrs.push_back(names[k].c_str());
      mat_ptrs.push_back(handles[k].ptr);
    }

    StringOut rep;
    ginv_status st = ginv_check_theorem(theorem.c_str(), name_ptrs.data(), mat_ptrs.data(),
                                        names.size(), &rep.ptr);
    if (!rep.ptr) die(st);
    if (format == "json")
      emit(rep.str(), output);
    else
      emit(report_text(json::parse(rep.str())), output);
    return exit_code_for(st);
  }

  if (cmd_fuzz->parsed()) {
    StringOut rep;
    ginv_status st =
        ginv_fuzz(theorem.c_str(), dim, seed, entry_bound, trials,
                  disabled_hypothesis.empty() ? nullptr : disabled_hypothesis.c_str(),
                  &rep.ptr);
    if (!rep.ptr) die(st);
    if (format == "json") {
      emit(rep.str(), output);
    } else {
      json j = json::parse(rep.str());
      std::ostringstream out;
      out << "theorem " << theorem << ": " << j.at("passed").get<std::size_t>() << "/"
          << j.at("spec").at("trials").get<std::size_t>() << " trials passed, "
          << j.at("failures").size() << " conclusion failures, "
          << j.at("hypothesis_rejections").get<std::size_t>() << " generator retries\n";
      for (const auto& f : j.at("failures")) {
        out << "FAILURE at trial " << f.at("trial").get<std::size_t>() << " (seed "
            << seed << "):\n";
        for (const auto& [name, m] : f.at("inputs").items())
          out << " input " << name << ":\n" << matrix_text(m);
      }
      emit(out.str(), output);
    }
    return exit_code_for(st);
  }

  if (cmd_paper->parsed()) {
    StringOut rep;
    ginv_status st = ginv_paper_examples(tamper ? 1 : 0, &rep.ptr);
    if (!rep.ptr) die(st);
    if (format == "json") {
      emit(rep.str(), output);
    } else {
      json j = json::parse(rep.str());
      std::ostringstream out;
      std::size_t ok_count = 0;
      for (const auto& ex : j) {
        out << "example " << ex.at("example").get<std::string>() << ": "
            << (ex.at("ok").get<bool>() ? "verified" : "FAILED") << "\n";
        for (const auto& c : ex.at("claims"))
          out << (c.at("verified").get<bool>() ? "  [ ok ] " : "  [FAIL] ")
              << c.at("text").get<std::string>() << "\n";
        for (const auto& d : ex.at("discrepancies"))
          out << "  note: " << d.get<std::string>() << "\n";
        if (ex.at("ok").get<bool>()) ++ok_count;
      }
      out << ok_count << "/" << j.size() << " examples verified\n";
      emit(out.str(), output);
    }
    return exit_code_for(st);
  }

  return 0;
}
