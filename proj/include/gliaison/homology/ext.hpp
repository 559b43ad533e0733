#pragma once

#include <map>

#include "gliaison/homology/resolution.hpp"

namespace gliaison {

// Ext^i(M, R) read off a resolution of M over R. Its generators are
// represented by cocycles in Hom(F_i, R), whose degrees are `ambient`.
struct ExtModule {
  int index = 0;
  ModulePresentation module;
  Matrix cocycles;
  Degrees ambient;
};

// Needs the resolution to reach F_{i+1}, unless it is complete.
ExtModule ext(const FreeResolution& res, int i);

// Hom_R(M, R) = ker of the dual of the relation map.
ModulePresentation hom_to_ring(const ModulePresentation& M);
// Same, keeping the generators as vectors of Hom(F_0, R).
ExtModule hom_to_ring_with_generators(const ModulePresentation& M);

// Hilbert function of a finite-length module over its support.
std::map<int, long long> finite_hilbert_function(const ModulePresentation& M);

// Graded k-dual of a finite-length module, computed as Ext^v_P(N, P(-v)).
ModulePresentation graded_dual(const ModulePresentation& N);

// H^i_*(M~) for 1 <= i <= v-2 by local duality over P: the graded dual of
// Ext^{v-1-i}_P(M, P(-v)). When that Ext is not of finite length it is
// returned undualized and `finite_length` is false.
struct CohomologyModule {
  int index = 0;
  ModulePresentation module;
  bool finite_length = true;
  std::map<int, long long> hilbert_function;  // filled when finite_length
};

CohomologyModule sheaf_cohomology(const ModulePresentation& M, int i);
// H^i_*(I~) for an ideal of P, via Ext^{v-i}_P(P/I, P(-v)).
CohomologyModule ideal_sheaf_cohomology(const GradedIdeal& I, int i);

}  // namespace gliaison
