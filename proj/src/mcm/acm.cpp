#include "gliaison/mcm/acm.hpp"

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"

namespace gliaison {

AcmCheck acm_module_check(const ModulePresentation& E) {
  if (!E.ring().has_modulus()) throw UsageError("acm_module_check needs a hypersurface context");
  AcmCheck out;
  ModulePresentation A = E.over_ambient();
  FreeResolution res = resolve(A);
  out.ambient_betti = res.betti();
  out.projective_dimension = res.length();
  out.acm = res.length() == 1 && !E.is_zero();
  if (out.acm) {
    const GradedMap& phi = res.maps[0];
    if (phi.source().size() == phi.target().size()) {
      out.factorization = mf_complete(phi, E.ring().modulus());
      out.report = mf_verify(*out.factorization);
      out.rank = out.report->rank;
    } else {
      out.acm = false;
    }
  }
  for (int i : {1, 2}) {
    CohomologyModule h = sheaf_cohomology(E, i);
    (i == 1 ? out.h1 : out.h2) = h.hilbert_function;
    (i == 1 ? out.h1_finite : out.h2_finite) = h.finite_length;
  }
  return out;
}

}  // namespace gliaison
