#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gliaison/kernel/field.hpp"
#include "gliaison/kernel/monomial.hpp"

namespace gliaison {

class PolynomialRing;
class Polynomial;
using RingPtr = std::shared_ptr<const PolynomialRing>;

// Standard-graded GF(p)[x_0..x_{n-1}], n <= kMaxVariables. Always held by RingPtr;
// two polynomials are compatible only when they point at the same instance.
class PolynomialRing : public std::enable_shared_from_this<PolynomialRing> {
 public:
  static RingPtr create(std::uint32_t p, std::vector<std::string> names);
  // Variables x0..x{n-1}.
  static RingPtr create(std::uint32_t p, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(long long c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Monomial& m, Coeff c = 1) const;

  struct Token {};
  PolynomialRing(Token, PrimeField field, std::vector<std::string> names);

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

struct Term {
  Coeff coeff;
  Monomial mono;
};

// Terms kept strictly grevlex-descending with nonzero coefficients.
// A default-constructed polynomial is zero and carries no ring; it combines with any ring.
class Polynomial {
 public:
  Polynomial() = default;
  // Sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);
  // Trusted: terms already normalized.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }
  const Term& leading_term() const;
  // Largest total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }
  int min_degree() const;
  bool is_homogeneous() const;
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(Coeff c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  Polynomial homogeneous_part(unsigned d) const;

  Coeff evaluate(const std::vector<Coeff>& point) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const PrimeField& field_of(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Shared ring of a and b; throws UsageError when both carry different rings.
RingPtr common_ring(const Polynomial& a, const Polynomial& b);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace gliaison
