#include "gliaison/groebner/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "gliaison/errors.hpp"

namespace gliaison {

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

using Dense = std::vector<long long>;  // coefficient of t^k at index k

void add_into(Dense& a, const Dense& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = false;
    for (auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens.swap(out);
}

Dense numerator(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  // pairwise coprime generators: product of (1 - t^deg)
  std::vector<unsigned> count(nvars, 0);
  bool coprime = true;
  for (auto& m : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] && ++count[i] > 1) coprime = false;
  if (coprime) {
    Dense r{1};
    for (auto& m : gens) {
      Dense next(r.size() + m.degree(), 0);
      for (std::size_t k = 0; k < r.size(); ++k) {
        next[k] += r[k];
        next[k + m.degree()] -= r[k];
      }
      r.swap(next);
    }
    return r;
  }
  std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x = Monomial::variable(pivot);
  // N(J) = N(J + (x)) + t * N(J : x)
  std::vector<Monomial> plus{x}, colon;
  for (auto& m : gens) {
    if (!m[pivot]) plus.push_back(m);
    colon.push_back(m[pivot] ? m / x : m);
  }
  Dense a = numerator(std::move(plus), nvars);
  Dense b = numerator(std::move(colon), nvars);
  add_into(a, b, 1);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

LaurentPoly clean(LaurentPoly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

}  // namespace

LaurentPoly monomial_quotient_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  Dense d = numerator(std::move(gens), nvars);
  LaurentPoly out;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k]) out[static_cast<int>(k)] = d[k];
  return out;
}

HilbertSeries::HilbertSeries(LaurentPoly numerator, std::size_t nvars)
    : numerator_(clean(std::move(numerator))), nvars_(nvars) {
  reduced_ = numerator_;
  if (reduced_.empty()) {
    dimension_ = -1;
    return;
  }
  std::size_t k = 0;
  for (;;) {
    long long at_one = 0;
    for (auto& [e, c] : reduced_) at_one += c;
    if (at_one != 0 || k == nvars_) break;
    // divide by (1 - t): quotient coefficients are partial sums
    LaurentPoly q;
    long long acc = 0;
    int lo = reduced_.begin()->first, hi = reduced_.rbegin()->first;
    for (int e = lo; e < hi; ++e) {
      auto it = reduced_.find(e);
      if (it != reduced_.end()) acc += it->second;
      if (acc) q[e] = acc;
    }
    reduced_ = std::move(q);
    ++k;
  }
  dimension_ = static_cast<int>(nvars_ - k);
}

long long HilbertSeries::multiplicity() const {
  long long s = 0;
  for (auto& [e, c] : reduced_) s += c;
  return s;
}

long long HilbertSeries::value(int n) const {
  if (dimension_ < 0) return 0;
  long long v = 0;
  for (auto& [k, c] : reduced_) {
    if (dimension_ == 0) {
      if (k == n) v += c;
    } else {
      v += c * binomial(static_cast<long long>(n) - k + dimension_ - 1, dimension_ - 1);
    }
  }
  return v;
}

std::map<int, long long> HilbertSeries::table(int lo, int hi) const {
  std::map<int, long long> out;
  for (int n = lo; n <= hi; ++n) out[n] = value(n);
  return out;
}

HilbertSeries HilbertSeries::shifted(int d) const {
  LaurentPoly p;
  for (auto& [e, c] : numerator_) p[e + d] = c;
  return HilbertSeries(std::move(p), nvars_);
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (nvars_ != o.nvars_ && !is_zero() && !o.is_zero())
    throw UsageError("Hilbert series over different rings");
  LaurentPoly p = numerator_;
  for (auto& [e, c] : o.numerator_) p[e] += c;
  return HilbertSeries(std::move(p), std::max(nvars_, o.nvars_));
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  LaurentPoly neg;
  for (auto& [e, c] : o.numerator_) neg[e] = -c;
  return *this + HilbertSeries(std::move(neg), o.nvars_);
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  os << "(";
  for (auto& [e, c] : reduced_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    if (e == 0) os << a;
    else os << (a == 1 ? "" : std::to_string(a) + "*") << "t^" << e;
  }
  if (first) os << "0";
  os << ")/(1-t)^" << std::max(dimension_, 0);
  return os.str();
}

}  // namespace gliaison
