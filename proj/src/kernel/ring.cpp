#include "gliaison/kernel/ring.hpp"

#include "gliaison/errors.hpp"

namespace gliaison {

Ring::Ring(RingPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw UsageError("null ambient ring");
}

Ring::Ring(RingPtr ambient, Polynomial modulus) : Ring(std::move(ambient)) {
  if (modulus.ring() != ambient_) throw UsageError("modulus lives in a different ring");
  if (!modulus.is_homogeneous() || modulus.degree() < 2)
    throw UsageError("modulus must be homogeneous of degree at least 2");
  modulus_ = modulus.monic();
}

const Polynomial& Ring::modulus() const {
  if (!modulus_) throw UsageError("ring has no modulus");
  return *modulus_;
}

bool Ring::operator==(const Ring& o) const {
  if (ambient_ != o.ambient_ || has_modulus() != o.has_modulus()) return false;
  return !modulus_ || *modulus_ == *o.modulus_;
}

std::string Ring::describe() const {
  std::string s = "GF(" + std::to_string(field().characteristic()) + ")[";
  for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + poly().names()[i];
  s += "]";
  if (modulus_) s += "/(" + modulus_->to_string() + ")";
  return s;
}

}  // namespace gliaison
