#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gliaison/homology/resolution.hpp"

namespace gliaison {

// Closed subscheme of P^n, or of the hypersurface X when the context carries
// a modulus. The ideal lives in P, is saturated, and contains the modulus.
class Subscheme {
 public:
  // Throws UsageError when the ideal is not saturated.
  Subscheme(Ring context, GradedIdeal ideal);
  // Adjoins the modulus and saturates.
  static Subscheme from_generators(const Ring& context, std::vector<Polynomial> gens);

  const Ring& context() const { return context_; }
  const GradedIdeal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }

  // Projective dimension; -1 for the empty scheme.
  int dimension() const;
  // Codimension in P^n, and in the context (X or P^n).
  int codimension() const;
  int codimension_in_context() const;
  long long degree() const;

  // Minimal resolution of P/I over P, computed once and shared by copies.
  const FreeResolution& resolution() const;
  BettiTable betti() const { return resolution().betti(); }
  int projective_dimension() const { return resolution().length(); }
  // I / (modulus) as a module over the context ring.
  ModulePresentation ideal_module() const;

  std::string describe() const;

 private:
  struct Cache;
  Ring context_;
  GradedIdeal ideal_;
  std::shared_ptr<Cache> cache_;
};

// pd(P/I) = codim
bool is_acm(const Subscheme& s);
// ACM with last Betti number 1
bool is_ag(const Subscheme& s);
// minimal generator count = codim, in P^n
bool is_ci(const Subscheme& s);
// The ideal is the modulus plus codim_in_context further generators.
bool is_ci_in_context(const Subscheme& s);
// codim Ext^j(P/I, P) >= j + 1 for every j > codim
bool is_unmixed(const Subscheme& s);

}  // namespace gliaison
