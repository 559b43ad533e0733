#pragma once

#include <map>
#include <optional>
#include <string>

#include "gliaison/mcm/factorization.hpp"
#include "gliaison/homology/resolution.hpp"

namespace gliaison {

struct AcmCheck {
  bool acm = false;  // pd over P equals 1 (MCM on the hypersurface)
  int projective_dimension = -1;
  BettiTable ambient_betti;
  int rank = 0;
  std::optional<MatrixFactorization> factorization;
  std::optional<MfReport> report;
  // Deficiency tables H^1_*, H^2_* of the sheaf on X; a table is only
  // meaningful when the matching flag is set.
  std::map<int, long long> h1, h2;
  bool h1_finite = true, h2_finite = true;

  bool cohomology_vanishes() const { return h1_finite && h2_finite && h1.empty() && h2.empty(); }
};

// Over a hypersurface context: resolve over P, read off the factorization
// when the resolution has length 1, and report the deficiency tables.
AcmCheck acm_module_check(const ModulePresentation& E);

}  // namespace gliaison
