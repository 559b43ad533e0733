#pragma once

#include <cstdint>
#include <random>

#include "gliaison/kernel/polynomial.hpp"

namespace gliaison {

// Deterministic randomness: every randomized routine draws from a stream
// seeded explicitly by its caller.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  Coeff coefficient(const PrimeField& F);
  Coeff nonzero_coefficient(const PrimeField& F);
  // Independent substream, e.g. for reseeding a retry.
  SeedStream fork() { return SeedStream(next()); }

 private:
  std::mt19937_64 engine_;
};

// Uniform element of the degree-d part of the ring (zero is possible).
Polynomial random_homogeneous(const RingPtr& ring, int degree, SeedStream& rng);

}  // namespace gliaison
