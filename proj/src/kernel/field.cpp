#include "gliaison/kernel/field.hpp"

#include <limits>
#include <string>

#include "gliaison/errors.hpp"

namespace gliaison {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  // residues are multiplied in 64 bits, so p must fit in 31 bits
  if (p > (1u << 31)) throw DomainError("characteristic too large: " + std::to_string(p));
  if (!is_prime(p)) throw DomainError("characteristic is not prime: " + std::to_string(p));
  if (p <= 3) throw DomainError("characteristic must exceed 3");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  // extended Euclid on (a, p)
  long long r0 = p_, r1 = a % p_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

long long PrimeField::to_signed(Coeff a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

}  // namespace gliaison
