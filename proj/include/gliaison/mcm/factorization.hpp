#pragma once

#include <string>
#include <vector>

#include "gliaison/homology/presentation.hpp"

namespace gliaison {

// phi: L1 -> L0 and psi: L0(-deg f) -> L1 over P with phi psi = psi phi = f id.
struct MatrixFactorization {
  Polynomial f;
  GradedMap phi;
  GradedMap psi;
  int rank = 0;  // rank of coker phi on the hypersurface, from det phi = unit * f^rank
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct MfReport {
  bool valid = false;
  int rank = -1;  // exponent found in det phi, -1 when det phi is not a power of f
  std::vector<Check> checks;
};

// Exact determinant by Laplace expansion memoized on column subsets.
Polynomial determinant(const Matrix& m);

MfReport mf_verify(const MatrixFactorization& mf);
// Builds psi column by column by lifting f e_j through phi; throws DomainError
// when f does not annihilate coker phi.
MatrixFactorization mf_complete(const GradedMap& phi, const Polynomial& f);

// Factorization of f + x^2 from one of f: blocks [[x, phi], [psi, -x]] on both sides.
// deg f must be 2 and x a variable not yet in use.
MatrixFactorization knoerrer_double_cover(const MatrixFactorization& mf, const Polynomial& x);
// Factorization of f + x*y: phi' = [[x, phi], [psi, -y]], psi' = [[y, phi], [psi, -x]].
MatrixFactorization knoerrer_xy(const MatrixFactorization& mf, const Polynomial& x, const Polynomial& y);

}  // namespace gliaison
