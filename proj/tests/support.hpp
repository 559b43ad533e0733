#pragma once

#include <string>
#include <vector>

#include "gliaison/groebner/ideal.hpp"
#include "gliaison/kernel/parse.hpp"
#include "gliaison/kernel/random.hpp"

namespace testing_support {

using namespace gliaison;

inline Polynomial poly(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

inline std::vector<Polynomial> polys(const RingPtr& R, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (auto& s : ss) out.push_back(poly(R, s));
  return out;
}

inline GradedIdeal ideal(const RingPtr& R, const std::vector<std::string>& ss) {
  return GradedIdeal(R, polys(R, ss));
}

// Sparse random homogeneous polynomial: a few random terms of degree d.
inline Polynomial sparse_random(const RingPtr& R, int d, std::size_t terms, SeedStream& rng) {
  auto monos = monomials_of_degree(R->nvars(), static_cast<unsigned>(d));
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k)
    ts.push_back(Term{rng.nonzero_coefficient(R->field()), monos[rng.next() % monos.size()]});
  return Polynomial(R, std::move(ts));
}

// Small random homogeneous ideal: 2-4 sparse generators of degree 1-3.
inline GradedIdeal random_ideal(const RingPtr& R, SeedStream& rng) {
  std::size_t n = 2 + rng.next() % 3;
  std::vector<Polynomial> gens;
  while (gens.size() < n) {
    int d = 1 + static_cast<int>(rng.next() % 3);
    Polynomial g = sparse_random(R, d, 1 + rng.next() % 3, rng);
    if (!g.is_zero()) gens.push_back(g);
  }
  return GradedIdeal(R, gens);
}

}  // namespace testing_support
