#include "gliaison/homology/ext.hpp"

#include "gliaison/errors.hpp"

namespace gliaison {

ExtModule ext(const FreeResolution& res, int i) {
  const Ring& ring = res.ring;
  const RingPtr& P = ring.ambient();
  if (i < 0) throw UsageError("negative Ext index");
  const int nmods = static_cast<int>(res.modules.size());
  if (i >= nmods) {
    if (!res.complete) throw UsageError("resolution too short for Ext^" + std::to_string(i));
    return ExtModule{i, ModulePresentation::free(ring, {}), Matrix(P, 0, 0), {}};
  }
  const Degrees dual_i = negated(res.modules[i]);
  // cocycles: kernel of the dual of F_{i+1} -> F_i
  Matrix K;
  Degrees kdeg;
  if (i < static_cast<int>(res.maps.size())) {
    GradedMap k = kernel(res.maps[i].dual());
    K = k.matrix();
    kdeg = k.source();
  } else {
    if (!res.complete) throw UsageError("resolution too short for Ext^" + std::to_string(i));
    K = Matrix::identity(P, dual_i.size());
    kdeg = dual_i;
  }
  // coboundaries: image of the dual of F_i -> F_{i-1}
  Matrix B(P, dual_i.size(), 0);
  Degrees bdeg;
  if (i > 0) {
    GradedMap d = res.maps[i - 1].dual();
    B = d.matrix();
    bdeg = d.source();
  }
  Subquotient sq = subquotient(ring, dual_i, K, kdeg, B, bdeg);
  return ExtModule{i, sq.module, sq.generators, dual_i};
}

ExtModule hom_to_ring_with_generators(const ModulePresentation& M) {
  const Ring& ring = M.ring();
  GradedMap k = kernel(M.relations().dual());
  Matrix B(ring.ambient(), M.num_generators(), 0);
  Subquotient sq = subquotient(ring, negated(M.degrees()), k.matrix(), k.source(), B, {});
  return ExtModule{0, sq.module, sq.generators, negated(M.degrees())};
}

ModulePresentation hom_to_ring(const ModulePresentation& M) { return hom_to_ring_with_generators(M).module; }

std::map<int, long long> finite_hilbert_function(const ModulePresentation& M) {
  HilbertSeries hs = M.hilbert_series();
  if (hs.krull_dimension() > 0) throw UsageError("module is not of finite length");
  std::map<int, long long> out;
  for (auto& [e, c] : hs.reduced_numerator())
    if (c) out[e] = c;
  return out;
}

ModulePresentation graded_dual(const ModulePresentation& N) {
  ModulePresentation A = N.over_ambient();
  if (!A.is_finite_length()) throw UsageError("graded dual needs a finite-length module");
  const int v = static_cast<int>(A.ring().nvars());
  if (A.is_zero()) return ModulePresentation::free(A.ring(), {});
  FreeResolution res = resolve(A);
  return ext(res, v).module.twisted(-v);
}

namespace {

CohomologyModule from_ext(const ModulePresentation& E, int i) {
  CohomologyModule out{i, E, true, {}};
  if (E.is_zero()) {
    out.module = ModulePresentation::free(E.ring(), {});
    return out;
  }
  if (!E.is_finite_length()) {
    out.finite_length = false;
    return out;
  }
  out.module = graded_dual(E);
  out.hilbert_function = finite_hilbert_function(out.module);
  return out;
}

}  // namespace

CohomologyModule sheaf_cohomology(const ModulePresentation& M, int i) {
  ModulePresentation A = M.over_ambient();
  const int v = static_cast<int>(A.ring().nvars());
  if (i < 1 || i > v - 2) throw UsageError("cohomology index outside 1..v-2");
  FreeResolution res = resolve(A);
  return from_ext(ext(res, v - 1 - i).module.twisted(-v), i);
}

CohomologyModule ideal_sheaf_cohomology(const GradedIdeal& I, int i) {
  Ring P(I.ring());
  const int v = static_cast<int>(P.nvars());
  if (i < 1 || i > v - 2) throw UsageError("cohomology index outside 1..v-2");
  FreeResolution res = resolve_quotient(P, I);
  return from_ext(ext(res, v - i).module.twisted(-v), i);
}

}  // namespace gliaison
