#include "gliaison/kernel/monomial.hpp"

#include <algorithm>
#include <limits>

#include "gliaison/errors.hpp"

namespace gliaison {

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::vector<unsigned>(exps)) {}

Monomial::Monomial(const std::vector<unsigned>& exps) {
  if (exps.size() > kMaxVariables) throw UsageError("too many exponents");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > std::numeric_limits<std::uint16_t>::max())
      throw UsageError("exponent out of range");
    exps_[i] = static_cast<std::uint16_t>(exps[i]);
    degree_ += exps[i];
  }
}

Monomial Monomial::variable(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw UsageError("variable index out of range");
  Monomial m;
  m.exps_[i] = static_cast<std::uint16_t>(e);
  m.degree_ = e;
  return m;
}

unsigned Monomial::masked_degree(VariableMask mask) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (mask & (1u << i)) d += exps_[i];
  return d;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned long v = static_cast<unsigned long>(exps_[i]) * e;
    if (v > std::numeric_limits<std::uint16_t>::max()) throw UsageError("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(v);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

void enumerate(std::size_t n, std::size_t var, unsigned left, std::vector<unsigned>& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == n) {
    cur[var] = left;
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(n, var + 1, left - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  enumerate(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

}  // namespace gliaison
