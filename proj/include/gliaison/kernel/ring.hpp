#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gliaison/kernel/polynomial.hpp"

namespace gliaison {

// Coordinate ring a computation runs over: P itself, or R_X = P/(f) for a
// homogeneous hypersurface f of degree >= 2. Submodules over R_X are always
// handled as P-submodules with f times the free basis adjoined.
class Ring {
 public:
  explicit Ring(RingPtr ambient);
  Ring(RingPtr ambient, Polynomial modulus);

  const RingPtr& ambient() const { return ambient_; }
  const PolynomialRing& poly() const { return *ambient_; }
  const PrimeField& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }

  bool has_modulus() const { return modulus_.has_value(); }
  const Polynomial& modulus() const;
  int modulus_degree() const { return modulus_ ? modulus_->degree() : 0; }
  // Krull dimension of the ring itself.
  std::size_t krull_dimension() const { return nvars() - (modulus_ ? 1 : 0); }

  Ring without_modulus() const { return Ring(ambient_); }

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  RingPtr ambient_;
  std::optional<Polynomial> modulus_;
};

}  // namespace gliaison
