#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace gliaison {

inline constexpr std::size_t kMaxVariables = 8;

using VariableMask = std::uint8_t;

// Dense exponent vector over at most kMaxVariables variables.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(const std::vector<unsigned>& exps);

  static Monomial variable(std::size_t i, unsigned e = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  unsigned masked_degree(VariableMask mask) const;

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] && o.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + o.exps_[i]);
    r.degree_ = degree_ + o.degree_;
    return r;
  }
  // Precondition: divisor divides *this.
  Monomial operator/(const Monomial& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
    r.degree_ = degree_ - divisor.degree_;
    return r;
  }
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  Monomial pow(unsigned e) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic comparison: >0 when a > b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of degree d in the first n variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace gliaison
