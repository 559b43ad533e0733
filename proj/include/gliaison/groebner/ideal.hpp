#pragma once

#include <memory>
#include <vector>

#include "gliaison/groebner/engine.hpp"
#include "gliaison/groebner/hilbert.hpp"
#include "gliaison/kernel/polynomial.hpp"
#include "gliaison/kernel/random.hpp"

namespace gliaison {

// Homogeneous ideal of P given by generators. The reduced Groebner basis and
// the minimal generators are computed lazily once and shared by copies.
class GradedIdeal {
 public:
  // Zero generators are dropped; throws UsageError on inhomogeneous ones.
  GradedIdeal(RingPtr ring, std::vector<Polynomial> gens);

  static GradedIdeal zero(RingPtr ring) { return GradedIdeal(std::move(ring), {}); }
  static GradedIdeal unit(RingPtr ring);
  // The irrelevant ideal (x_0, ..., x_{n-1}).
  static GradedIdeal irrelevant(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced, monic, sorted by leading monomial ascending.
  const std::vector<Polynomial>& groebner_basis() const;
  // Minimal homogeneous generators, sorted by degree (ties keep input order).
  const std::vector<Polynomial>& minimal_generators() const;
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  bool contains(const GradedIdeal& o) const;
  bool operator==(const GradedIdeal& o) const;
  bool operator!=(const GradedIdeal& o) const { return !(*this == o); }
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }

  // Invariants of S/I.
  HilbertSeries hilbert_series() const;
  long long hilbert_function(int n) const { return hilbert_series().value(n); }
  int krull_dimension() const { return hilbert_series().krull_dimension(); }
  int codimension() const;
  long long degree() const { return hilbert_series().multiplicity(); }

  // Basis of the degree-d part of I (row-reduced, leading monomials distinct).
  std::vector<Polynomial> degree_part(int d) const;
  // Uniform random element of I_d: sum of generators times random forms.
  Polynomial random_element(int d, SeedStream& rng) const;

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

GradedIdeal operator+(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal operator*(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b);
// I : g
GradedIdeal quotient(const GradedIdeal& I, const Polynomial& g);
// I : J, the intersection of I : g over generators g of J.
GradedIdeal quotient(const GradedIdeal& I, const GradedIdeal& J);
// I : J^infinity by iterated quotients; J defaults to the irrelevant ideal.
GradedIdeal saturate(const GradedIdeal& I);
GradedIdeal saturate(const GradedIdeal& I, const GradedIdeal& J);
bool is_saturated(const GradedIdeal& I);

// Reduced Groebner basis of (gens) intersected with the subring free of the
// masked variables. Inputs may be inhomogeneous.
std::vector<Polynomial> eliminate(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                  VariableMask variables);
GradedIdeal eliminate(const GradedIdeal& I, VariableMask variables);

// Reduced Groebner basis of arbitrary polynomials (possibly inhomogeneous).
std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       EngineOptions options = {});

}  // namespace gliaison
