#pragma once

#include <cstdint>
#include <random>

#include "veerlab/braid.hpp"
#include "veerlab/modular.hpp"
#include "veerlab/symplectic.hpp"

namespace veerlab {

// Seeded generator; every sweep and every internal random choice goes
// through one of these so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return eng_(); }
  // Independent stream derived from this seed and an index.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
};

BraidWord random_braid(Rng& rng, int strands, std::size_t length);
BraidWord random_braid_upto(Rng& rng, int strands, std::size_t max_length);
BraidWord random_positive_braid(Rng& rng, int strands, std::size_t length);
// Random word of length <= max_length in A, B, B^-1.
PSL2Element random_psl(Rng& rng, std::size_t max_length);
QMatrix random_symmetric(Rng& rng, std::size_t n, long range);
// Product of random symplectic transvections I + c v v^T Omega.
QMatrix random_symplectic(Rng& rng, const SymplecticSpace& space, int steps = 4, long range = 2);
LagrangianFrame random_lagrangian(Rng& rng, const SymplecticSpace& space, long range = 3);

}  // namespace veerlab
