#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gliaison/liaison/subscheme.hpp"

namespace gliaison {

enum class LinkKind { CompleteIntersection, Gorenstein };

struct LinkageCertificate {
  GradedIdeal c, y, residual;
  LinkKind kind = LinkKind::Gorenstein;
  bool in_hypersurface = false;
  // AG evidence for Y
  bool y_symmetric_betti = false;
  bool y_last_betti_one = false;
  bool containment = false;           // I_Y in I_C
  bool codimensions_agree = false;
  bool c_unmixed = false;
  bool quotient_saturated = false;     // I_Y : I_C needed no saturation
  bool bidual = false;                 // I_Y : I_C' = I_C
  bool intersection_equal = false;     // I_C cap I_C' = I_Y (flag only)
  bool degree_additive = false;
  bool valid = false;
  std::string failure = {};  // first failing requirement when not valid

  std::string kind_name() const;
};

struct LinkResult {
  Subscheme residual;
  LinkageCertificate certificate;
};

// C' = I_Y : I_C (saturated), with the checks recorded in the certificate.
// A failed precondition yields an invalid certificate; the residual is then
// the quotient as computed.
LinkResult link(const Subscheme& C, const Subscheme& Y);

// The subscheme cut out by the given forms (and the modulus).
Subscheme complete_intersection(const Ring& context, const std::vector<Polynomial>& forms);

struct CiLink {
  Subscheme y;
  Subscheme residual;
  LinkageCertificate certificate;
  int attempts = 0;
};

// Links C by Y = (f_a, f_b) + modulus for random f_a, f_b in I_C.
CiLink ci_link_in_context(const Subscheme& C, int a, int b, std::uint64_t seed, int retries = 16);

struct Biliaison {
  Subscheme intermediate;
  Subscheme residual;
  LinkageCertificate first, second;
  int d = 0;  // degree of the first linking form
};

// Elementary biliaison of height m on S: link C by S cap F_d, then the
// residual by S cap F_{d+m}. S must be arithmetically Gorenstein.
Biliaison elementary_biliaison(const Subscheme& C, const Subscheme& S, int m, std::uint64_t seed,
                               int retries = 16);

}  // namespace gliaison
