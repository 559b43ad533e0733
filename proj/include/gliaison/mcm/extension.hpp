#pragma once

#include <vector>

#include "gliaison/homology/resolution.hpp"

namespace gliaison {

// Ext^1(B, A) from a minimal presentation F1 -> F0 of B and its next syzygies.
// Hom(F1, A) is the sum over relations k of A(s_k); cocycles are columns in
// those coordinates, block k holding the image of relation k.
struct Ext1 {
  ModulePresentation module;
  Matrix cocycles;
  ModulePresentation quotient;  // B on the minimal presentation used
  ModulePresentation sub;       // A
};

Ext1 ext1(const ModulePresentation& B, const ModulePresentation& A);

// Class of an extension 0 -> sub -> E -> quotient(-degree) -> 0, given by the
// images in `sub` of the relations of `quotient` (one column per relation).
struct ExtensionClass {
  ModulePresentation sub;
  ModulePresentation quotient;
  Matrix cocycle;
  int degree = 0;
};

// Generator of least degree; ties go to the first generator.
std::size_t canonical_generator(const Ext1& e);
ExtensionClass extension_class(const Ext1& e, std::size_t generator);
ExtensionClass zero_class(const ModulePresentation& sub, const ModulePresentation& quotient);

struct Extension {
  ModulePresentation module;  // generators: those of sub, then those of quotient
  bool hilbert_additive = false;
  bool split = false;  // ambient Betti table equals that of sub + quotient
};

// Throws UsageError when the cocycle does not vanish on second syzygies.
Extension extension_module(const ExtensionClass& c);

// Extension 0 -> L -> N -> I -> 0 of the ideal module I/(f) by the free module
// L dual to a set of generators of Ext^1(I, R): all of them (the universal
// extension) or only one of least degree.
struct IdealExtension {
  ModulePresentation module;  // generators: ideal generators, then those of L
  Degrees sub_degrees;
  std::vector<Polynomial> ideal_generators;
  std::size_t ext_generators = 0;  // minimal generators of Ext^1(I, R)

  // Columns: the generators of L in generator coordinates of `module`.
  Matrix sub_inclusion() const;
};

IdealExtension ideal_extension(const Ring& ring, const GradedIdeal& I, bool all_generators);

}  // namespace gliaison
