#include "gliaison/kernel/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gliaison/errors.hpp"

namespace gliaison {

PolynomialRing::PolynomialRing(Token, PrimeField field, std::vector<std::string> names)
    : field_(field), names_(std::move(names)) {}

RingPtr PolynomialRing::create(std::uint32_t p, std::vector<std::string> names) {
  if (names.empty()) throw UsageError("ring needs at least one variable");
  if (names.size() > kMaxVariables)
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw UsageError("duplicate variable name " + names[i]);
  return std::make_shared<const PolynomialRing>(Token{}, PrimeField(p), std::move(names));
}

RingPtr PolynomialRing::create(std::uint32_t p, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return create(p, std::move(names));
}

std::optional<std::size_t> PolynomialRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial PolynomialRing::zero() const { return Polynomial::from_sorted(shared_from_this(), {}); }
Polynomial PolynomialRing::one() const { return constant(1); }

Polynomial PolynomialRing::constant(long long c) const {
  Coeff v = field_.from_int(c);
  if (v == 0) return zero();
  return Polynomial::from_sorted(shared_from_this(), {Term{v, Monomial()}});
}

Polynomial PolynomialRing::variable(std::size_t i) const {
  if (i >= nvars()) throw UsageError("variable index out of range");
  return Polynomial::from_sorted(shared_from_this(), {Term{1, Monomial::variable(i)}});
}

Polynomial PolynomialRing::monomial(const Monomial& m, Coeff c) const {
  c %= field_.characteristic();
  if (c == 0) return zero();
  return Polynomial::from_sorted(shared_from_this(), {Term{c, m}});
}

RingPtr common_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring() || a.ring() == b.ring()) return a.ring();
  throw UsageError("polynomials belong to different rings");
}

namespace {

std::vector<Term> normalize(const PrimeField& F, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = t.coeff % F.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(Term{c, t.mono});
    }
  }
  return out;
}

// a + s*b for sorted term lists
std::vector<Term> merge_add(const PrimeField& F, const std::vector<Term>& a,
                            const std::vector<Term>& b, Coeff s) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{F.mul(s, b[j].coeff), b[j].mono});
      ++j;
    } else {
      Coeff v = F.add(a[i].coeff, F.mul(s, b[j].coeff));
      if (v) out.push_back(Term{v, a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{F.mul(s, b[j].coeff), b[j].mono});
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  if (!ring_) {
    if (!terms.empty()) throw UsageError("nonzero polynomial without a ring");
    return;
  }
  terms_ = normalize(ring_->field(), std::move(terms));
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(terms);
  return p;
}

const PrimeField& Polynomial::field_of(const Polynomial& o) const {
  return ring_ ? ring_->field() : o.ring_->field();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::min_degree() const {
  int d = -1;
  for (auto& t : terms_)
    if (d < 0 || static_cast<int>(t.mono.degree()) < d) d = static_cast<int>(t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  if (terms_.empty()) return *this;
  const PrimeField& F = ring_->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = F.neg(t.coeff);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  RingPtr r = common_ring(*this, o);
  if (o.is_zero()) return from_sorted(r, terms_);
  if (is_zero()) return from_sorted(r, o.terms_);
  return from_sorted(r, merge_add(r->field(), terms_, o.terms_, 1));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  RingPtr r = common_ring(*this, o);
  if (o.is_zero()) return from_sorted(r, terms_);
  return from_sorted(r, merge_add(r->field(), terms_, o.terms_, r->field().neg(1)));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  RingPtr r = common_ring(*this, o);
  if (is_zero() || o.is_zero()) return from_sorted(r, {});
  const PrimeField& F = r->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) prod.push_back(Term{F.mul(a.coeff, b.coeff), a.mono * b.mono});
  return Polynomial(r, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  if (terms_.empty()) return *this;
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return from_sorted(ring_, {});
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  if (terms_.empty()) return *this;
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return from_sorted(ring_, {});
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff = F.mul(t.coeff, c);
    t.mono = t.mono * m;
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  if (!ring_) {
    if (e == 0) throw UsageError("power of a ringless zero");
    return *this;
  }
  Polynomial result = ring_->one();
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  std::vector<Term> out;
  for (auto& t : terms_)
    if (t.mono.degree() == d) out.push_back(t);
  return from_sorted(ring_, std::move(out));
}

Coeff Polynomial::evaluate(const std::vector<Coeff>& point) const {
  if (terms_.empty()) return 0;
  const PrimeField& F = ring_->field();
  if (point.size() < ring_->nvars()) throw UsageError("evaluation point too short");
  Coeff sum = 0;
  for (auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) v = F.mul(v, F.pow(point[i], t.mono[i]));
    sum = F.add(sum, v);
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && ring_ != o.ring_) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const PrimeField& F = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    long long c = F.to_signed(t.coeff);
    bool neg = c < 0;
    unsigned long long a = neg ? static_cast<unsigned long long>(-c) : static_cast<unsigned long long>(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << monomial_to_string(t.mono, ring_->names());
    }
  }
  return os.str();
}

}  // namespace gliaison
