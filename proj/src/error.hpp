#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

enum class Errc {
  dimension_mismatch,
  singular,
  parse,
  non_coprime_moduli,
  not_idempotent,
  not_hirano,
  hypothesis_violated,
  verification_failure,
  unknown_theorem,
  missing_input,
  generation_exhausted,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ginv
