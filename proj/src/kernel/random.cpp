#include "gliaison/kernel/random.hpp"

namespace gliaison {

Coeff SeedStream::coefficient(const PrimeField& F) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.characteristic() - 1);
  return dist(engine_);
}

Coeff SeedStream::nonzero_coefficient(const PrimeField& F) {
  std::uniform_int_distribution<std::uint32_t> dist(1, F.characteristic() - 1);
  return dist(engine_);
}

Polynomial random_homogeneous(const RingPtr& ring, int degree, SeedStream& rng) {
  if (degree < 0) return ring->zero();
  std::vector<Term> terms;
  for (auto& m : monomials_of_degree(ring->nvars(), static_cast<unsigned>(degree)))
    terms.push_back(Term{rng.coefficient(ring->field()), m});
  return Polynomial(ring, std::move(terms));
}

}  // namespace gliaison
