#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace ginv {

// The worked numeric examples shipped as regression fixtures.
namespace fixtures {
Matrix ex36_a();  // [[1,1],[0,0]]
Matrix ex36_b();  // [[0,1],[0,1]]
Matrix ex51_a();  // [[0,0,1],[1,0,1],[1,0,0]]
Matrix ex51_printed_tripotent();
Matrix ex51_printed_nilpotent();
Matrix ex52_a();
Matrix ex52_b();
Matrix ex52_block();  // the printed 4x4
Matrix ex53_a();
Matrix ex53_b();
}  // namespace fixtures

struct ExampleClaim {
  std::string text;
  bool verified;
};

struct ExampleReport {
  std::string example_id;
  std::vector<ExampleClaim> claims;
  std::vector<std::string> discrepancies;  // documented mismatches in the source text
  bool ok() const {
    for (const auto& c : claims)
      if (!c.verified) return false;
    return true;
  }
};

// Runs all four examples end to end. `tamper` flips one fixture entry; it
// exists so the harness itself can be shown to catch regressions.
std::vector<ExampleReport> run_paper_examples(bool tamper = false);

}  // namespace ginv
