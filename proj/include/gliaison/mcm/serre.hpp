#pragma once

#include <cstdint>
#include <optional>

#include "gliaison/liaison/subscheme.hpp"
#include "gliaison/mcm/acm.hpp"
#include "gliaison/mcm/extension.hpp"

namespace gliaison {

// Rank over the context ring: ratio of multiplicities when dimensions agree.
int module_rank(const ModulePresentation& N);

// 0 -> R(-a) -> N -> I_{Y,X} -> 0 for an AG subscheme Y of codimension 2 in
// the context, from the generator of the cyclic module Ext^1(I_{Y,X}, R).
struct SerreSheaf {
  IdealExtension extension;
  int a = 0;
  std::optional<AcmCheck> acm;  // filled over a hypersurface context
  // The section R(-a) -> N, in generator coordinates of N.
  Column section() const;
};

SerreSheaf serre_sheaf_from_ag(const Subscheme& Y);

// 0 -> R -> N(a) -> I_{Y,X}(b) -> 0 from a random section s of N of degree a.
// The ideal is the image of Hom(N, R) under evaluation at s, saturated.
struct SerreSection {
  Subscheme subscheme;
  int b = 0;
  Column section;
  bool exact = false;  // Hilbert series of N(a) - R equals that of I_{Y,X}(b)
  int attempts = 0;
};

// The same for a given section s of degree a; empty when the vanishing
// locus is not AG of codimension 2.
std::optional<SerreSection> serre_subscheme_of_section(const ModulePresentation& N, int a, const Column& s);
SerreSection serre_subscheme_from_section(const ModulePresentation& N, int a, std::uint64_t seed,
                                          int retries = 16);

// As above, with s random among the sections whose vanishing locus contains V(Z).
SerreSection serre_subscheme_through(const ModulePresentation& N, int a, const GradedIdeal& Z, std::uint64_t seed,
                                     int retries = 16);
// L(-a) = I_{S,X} for a map L -> R(a) given by an element of Hom(L, R) of
// degree a; a runs over [lo, hi], trying the generators of Hom(L, R) first.
struct SurfaceFromSheaf {
  Subscheme surface;
  int a = 0;
  Column map;  // the element of Hom(L, R), in coordinates dual to L's generators
};

SurfaceFromSheaf rank1_acm_to_surface(const ModulePresentation& L, int lo, int hi, std::uint64_t seed = 1);

}  // namespace gliaison
