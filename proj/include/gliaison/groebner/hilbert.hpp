#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gliaison/kernel/monomial.hpp"

namespace gliaison {

// Laurent polynomial in t with integer coefficients, keyed by exponent.
using LaurentPoly = std::map<int, long long>;

// Hilbert series N(t) / (1-t)^nvars of a graded module over a polynomial ring in nvars variables.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPoly numerator, std::size_t nvars);

  const LaurentPoly& numerator() const { return numerator_; }
  std::size_t nvars() const { return nvars_; }

  // Numerator with every (1-t) factor cancelled; the remaining power of
  // (1-t) in the denominator is the Krull dimension.
  const LaurentPoly& reduced_numerator() const { return reduced_; }
  // Krull dimension; -1 for the zero module.
  int krull_dimension() const { return dimension_; }
  // Multiplicity: reduced numerator at t = 1 (0 for the zero module).
  long long multiplicity() const;
  bool is_zero() const { return numerator_.empty(); }

  long long value(int n) const;
  std::map<int, long long> table(int lo, int hi) const;

  HilbertSeries shifted(int d) const;  // series of M(-d)
  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  bool operator==(const HilbertSeries& o) const {
    return nvars_ == o.nvars_ && numerator_ == o.numerator_;
  }

  std::string to_string() const;

 private:
  LaurentPoly numerator_;
  std::size_t nvars_ = 0;
  LaurentPoly reduced_;
  int dimension_ = -1;
};

// Numerator of S/J for a monomial ideal J in nvars variables (the series is N/(1-t)^nvars).
LaurentPoly monomial_quotient_numerator(std::vector<Monomial> gens, std::size_t nvars);

long long binomial(long long n, long long k);

}  // namespace gliaison
