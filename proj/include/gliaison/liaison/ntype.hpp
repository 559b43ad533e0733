#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gliaison/liaison/linkage.hpp"
#include "gliaison/liaison/rao.hpp"

namespace gliaison {

// 0 -> L -> N -> I_C(a) -> 0 with L free, H^1_*(N) = M_C(a) and H^2_*(N) = 0.
struct NTypeResolution {
  ModulePresentation n;
  Degrees l;
  Matrix map;                          // columns: generators of L in generator coordinates of N
  std::vector<Polynomial> projection;  // image in I_C of each generator of N
  int a = 0;
};

struct NTypeCheck {
  bool exact = false;         // Hilbert series of coker(L -> N) and of I_C(a) agree, and L injects
  bool image_is_ideal = false;  // the projection generates I_C exactly
  HilbertTable h1, h2;
  bool h1_finite = false, h2_finite = false;
  bool h1_matches = false;    // H^1 table is the Rao table translated by -a
  bool h2_zero = false;
  bool valid = false;
  std::string failure;
};

// The universal extension of I_C by the duals of the generators of Ext^1(I_C, R).
NTypeResolution n_type_resolution(const Subscheme& C);
NTypeCheck verify_ntype(const NTypeResolution& nt, const Subscheme& C, const RaoModule& rao);

// (N^sigma)^dual for the first syzygy module N^sigma of N (minimal cover).
ModulePresentation syzygy_dual(const ModulePresentation& N);

// N-type resolution of the residual C' of C in the AG subscheme Y, built as the
// fibered sum of L^dual + E^dual and F^dual over N^dual (F the free cover of N,
// E the rank 2 module of Y); its free part is F^dual.
NTypeResolution link_transform_ntype(const NTypeResolution& nt, const Subscheme& C, const Subscheme& Y);

struct CurveFromRao {
  Subscheme curve;
  int a = 0;         // Q = coker(L' -> N') is I_C'(a)
  int attempts = 0;
  int pad = 0;
  int rank = 0;      // rank of N'
};

// A curve whose Rao module has the Hilbert function of M up to translation:
// N' = (third syzygy of M*)^dual, L' free of rank one less mapped randomly.
CurveFromRao curve_from_rao_module(const ModulePresentation& M, const Ring& context, std::uint64_t seed,
                                   int retries = 16, int pad = 0);

}  // namespace gliaison
