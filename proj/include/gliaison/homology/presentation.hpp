#pragma once

#include <string>
#include <vector>

#include "gliaison/groebner/ideal.hpp"
#include "gliaison/homology/matrix.hpp"
#include "gliaison/kernel/ring.hpp"

namespace gliaison {

// Generator degrees of a graded free module: F = sum R(-d_i).
using Degrees = std::vector<int>;

Degrees negated(const Degrees& d);
Degrees concat(const Degrees& a, const Degrees& b);
Degrees shifted(const Degrees& d, int s);

// Degree-preserving map of graded free modules source -> target. Entry (i, j)
// is zero or homogeneous of degree source[j] - target[i]; entries are kept
// reduced modulo the ring's hypersurface.
class GradedMap {
 public:
  GradedMap(Ring ring, Degrees target, Degrees source, Matrix matrix);
  static GradedMap zero(const Ring& ring, Degrees target, Degrees source);
  static GradedMap identity(const Ring& ring, const Degrees& d);

  const Ring& ring() const { return ring_; }
  const Degrees& target() const { return target_; }
  const Degrees& source() const { return source_; }
  const Matrix& matrix() const { return matrix_; }

  // Hom(-, R): transpose with negated degrees.
  GradedMap dual() const;
  // this o inner
  GradedMap compose(const GradedMap& inner) const;
  bool is_zero() const { return matrix_.is_zero(); }

 private:
  Ring ring_;
  Degrees target_;
  Degrees source_;
  Matrix matrix_;
};

// Cokernel of a relation map; over R_X this is the cokernel over R_X.
class ModulePresentation {
 public:
  explicit ModulePresentation(GradedMap relations);
  static ModulePresentation free(const Ring& ring, Degrees degrees);
  // R / I for an ideal I of P (over R_X, I should contain the modulus).
  static ModulePresentation cyclic_quotient(const Ring& ring, const GradedIdeal& I);
  // The ideal I/(f) as an R-module, on its minimal generators.
  static ModulePresentation ideal_module(const Ring& ring, const GradedIdeal& I);

  const Ring& ring() const { return relations_.ring(); }
  const Degrees& degrees() const { return relations_.target(); }
  const GradedMap& relations() const { return relations_; }
  std::size_t num_generators() const { return degrees().size(); }

  HilbertSeries hilbert_series() const;
  bool is_zero() const;
  int krull_dimension() const { return hilbert_series().krull_dimension(); }
  bool is_finite_length() const { return krull_dimension() <= 0; }

  // M(a): generator degrees decrease by a.
  ModulePresentation twisted(int a) const;
  // The same module regarded over P: the relation f*I is appended over R_X.
  ModulePresentation over_ambient() const;
  // The same relations read over another context on the same ambient ring
  // (e.g. a P-module annihilated by f regarded over R_X).
  ModulePresentation over(const Ring& ring) const;

  std::string describe() const;

 private:
  GradedMap relations_;
};

struct PrunedPresentation {
  ModulePresentation module;
  std::vector<std::size_t> kept;  // surviving original generators, in order
  Matrix old_to_new;              // column g: original generator g in the new generators
};

// Removes generators killed by relations with a unit entry.
PrunedPresentation prune(const ModulePresentation& M);
// The same elimination on a bare matrix (entries need not be homogeneous);
// returns the relation matrix on the surviving rows.
Matrix prune_units(const Ring& ring, const Matrix& m);
// Prunes, then keeps a minimal subset of the relations.
PrunedPresentation minimize(const ModulePresentation& M);

// (span of gens + span of rels) / span of rels inside a free module.
struct Subquotient {
  ModulePresentation module;
  Matrix generators;  // ambient representative of each generator of `module`
};

Subquotient subquotient(const Ring& ring, const Degrees& ambient, const Matrix& gens,
                        const Degrees& gen_degrees, const Matrix& rels, const Degrees& rel_degrees);

// Minimal generators of the kernel of a map of free modules, as a map into its source.
GradedMap kernel(const GradedMap& map);

// Map of presented modules given on generators: column j is the image of
// source generator j in target generator coordinates.
struct ModuleMap {
  ModulePresentation source;
  ModulePresentation target;
  Matrix matrix;
};

bool is_well_defined(const ModuleMap& h);
Subquotient kernel(const ModuleMap& h);
Subquotient image(const ModuleMap& h);
ModulePresentation cokernel(const ModuleMap& h);

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);

// Pushout of b <- a -> c given by f1: a -> b and f2: a -> c.
ModulePresentation fibered_sum(const ModulePresentation& a, const ModulePresentation& b,
                               const ModulePresentation& c, const Matrix& f1, const Matrix& f2);

// Annihilator as an ideal of P (contains the modulus over R_X).
GradedIdeal annihilator(const ModulePresentation& M);

// Random element of degree d: sum of generators times random forms.
Column random_module_element(const ModulePresentation& M, int d, SeedStream& rng);

// Whether a column of generator coordinates is zero in M.
bool is_zero_element(const ModulePresentation& M, const Column& v);

}  // namespace gliaison
