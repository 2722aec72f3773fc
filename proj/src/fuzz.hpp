#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "theorems.hpp"

namespace ginv {

// Portable deterministic generator (splitmix64). std:: distributions are
// implementation-defined, so all draws go through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::string theorem_id;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  long entry_bound = 3;
  std::size_t trials = 1;
};

struct FuzzFailure {
  std::size_t trial;
  TheoremReport report;
};

struct FuzzReport {
  GenSpec spec;
  std::size_t passed = 0;
  std::size_t hypothesis_rejections = 0;
  std::vector<FuzzFailure> failures;
};

// Hirano axiom check built from exactcore primitives only; the independent
// oracle against which every certificate is validated.
bool oracle_verify_hirano(const Matrix& a, const Matrix& x);

// Random scalars/matrices over Q(i) with numerators and denominators
// bounded by `bound`.
Scalar random_scalar(Rng& rng, long bound, bool allow_imaginary = true);
Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long bound,
                     bool allow_imaginary = true);
// Random invertible matrix with small integer entries (retried until
// nonsingular); also returns the exact inverse.
std::pair<Matrix, Matrix> random_similarity(std::size_t n, Rng& rng, long bound);

// S J S^-1 with J = blockdiag(unit upper triangular, strictly upper).
Matrix gen_strongly_drazin(std::size_t dim, std::uint64_t seed, long entry_bound);
// S T S^-1 with T upper triangular, diagonal in {-1, 0, 1}.
Matrix gen_hirano(std::size_t dim, std::uint64_t seed, long entry_bound);

// Inputs satisfying every hypothesis of the theorem exactly, built in the
// proofs' block normal forms and conjugated by a random similarity.
std::map<std::string, Matrix> gen_instance(const GenSpec& spec, std::size_t trial = 0,
                                           std::size_t* rejections = nullptr,
                                           const std::string& disabled_hypothesis = "");

FuzzReport run_fuzz(const GenSpec& spec, const std::string& disabled_hypothesis = "");

}  // namespace ginv
