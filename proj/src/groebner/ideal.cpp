#include "gliaison/groebner/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "gliaison/errors.hpp"
#include "gliaison/groebner/module.hpp"

namespace gliaison {

struct GradedIdeal::Cache {
  std::once_flag gb_once;
  std::optional<ModuleGroebnerBasis> engine;
  std::vector<Polynomial> gb;
  std::vector<Polynomial> minimal;
  std::once_flag hs_once;
  HilbertSeries hs;
};

namespace {

const TermOrder& rank_one_order() {
  static const TermOrder order(std::vector<int>{0});
  return order;
}

SparseVector to_sparse1(const Polynomial& p) {
  SparseVector v;
  v.reserve(p.size());
  for (auto& t : p.terms()) v.push_back(ModuleTerm{t.coeff, t.mono, 0});
  return v;  // grevlex order coincides with the rank-one order
}

Polynomial from_sparse1(const RingPtr& ring, const SparseVector& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (auto& t : v) terms.push_back(Term{t.coeff, t.mono});
  return Polynomial::from_sorted(ring, std::move(terms));
}

}  // namespace

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw UsageError("ideal without a ring");
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_) throw UsageError("generator belongs to a different ring");
    if (!g.is_homogeneous()) throw UsageError("ideal generator is not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

GradedIdeal GradedIdeal::unit(RingPtr ring) {
  auto one = ring->one();
  return GradedIdeal(std::move(ring), {one});
}

GradedIdeal GradedIdeal::irrelevant(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return GradedIdeal(std::move(ring), std::move(vars));
}

const std::vector<Polynomial>& GradedIdeal::groebner_basis() const {
  std::call_once(cache_->gb_once, [this] {
    std::vector<SparseVector> inputs;
    for (auto& g : gens_) inputs.push_back(to_sparse1(g));
    cache_->engine = ModuleGroebnerBasis::compute(ring_->field(), rank_one_order(), std::move(inputs));
    for (auto& e : cache_->engine->elements()) cache_->gb.push_back(from_sparse1(ring_, e));
    const auto& flags = cache_->engine->minimal_inputs();
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (flags[k]) cache_->minimal.push_back(gens_[k]);
    std::stable_sort(cache_->minimal.begin(), cache_->minimal.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  });
  return cache_->gb;
}

const std::vector<Polynomial>& GradedIdeal::minimal_generators() const {
  groebner_basis();
  return cache_->minimal;
}

std::vector<Monomial> GradedIdeal::leading_monomials() const {
  std::vector<Monomial> out;
  for (auto& g : groebner_basis()) out.push_back(g.leading_term().mono);
  return out;
}

Polynomial GradedIdeal::normal_form(const Polynomial& p) const {
  if (p.ring() && p.ring() != ring_) throw UsageError("polynomial belongs to a different ring");
  groebner_basis();
  return from_sparse1(ring_, cache_->engine->normal_form(to_sparse1(p)));
}

bool GradedIdeal::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

bool GradedIdeal::contains(const GradedIdeal& o) const {
  if (o.ring_ != ring_) throw UsageError("ideals belong to different rings");
  for (auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool GradedIdeal::operator==(const GradedIdeal& o) const {
  if (o.ring_ != ring_) throw UsageError("ideals belong to different rings");
  return groebner_basis() == o.groebner_basis();
}

bool GradedIdeal::is_unit() const {
  auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

HilbertSeries GradedIdeal::hilbert_series() const {
  std::call_once(cache_->hs_once, [this] {
    cache_->hs = HilbertSeries(monomial_quotient_numerator(leading_monomials(), ring_->nvars()),
                               ring_->nvars());
  });
  return cache_->hs;
}

int GradedIdeal::codimension() const {
  return static_cast<int>(ring_->nvars()) - krull_dimension();
}

std::vector<Polynomial> GradedIdeal::degree_part(int d) const {
  std::vector<Polynomial> out;
  if (d < 0) return out;
  auto leads = leading_monomials();
  for (auto& m : monomials_of_degree(ring_->nvars(), static_cast<unsigned>(d))) {
    bool in_lead = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!in_lead) continue;
    Polynomial u = ring_->monomial(m);
    out.push_back(u - normal_form(u));
  }
  return out;
}

Polynomial GradedIdeal::random_element(int d, SeedStream& rng) const {
  Polynomial acc = ring_->zero();
  for (auto& b : degree_part(d)) acc += b.scaled(rng.coefficient(ring_->field()));
  return acc;
}

std::string GradedIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) s += (k ? ", " : "") + gens_[k].to_string();
  return s + ")";
}

GradedIdeal operator+(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw UsageError("ideals belong to different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return GradedIdeal(a.ring(), std::move(gens));
}

GradedIdeal operator*(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw UsageError("ideals belong to different rings");
  std::vector<Polynomial> gens;
  for (auto& f : a.minimal_generators())
    for (auto& g : b.minimal_generators()) gens.push_back(f * g);
  return GradedIdeal(a.ring(), std::move(gens));
}

namespace {

// Polynomial parts of the basis elements whose leading term lies in component 1
// of the two-component module trick.
std::vector<Polynomial> second_block(const RingPtr& ring, const ModuleGroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (auto& e : gb.elements()) {
    if (e[0].comp != 1) continue;
    std::vector<Term> terms;
    for (auto& t : e) terms.push_back(Term{t.coeff, t.mono});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

}  // namespace

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw UsageError("ideals belong to different rings");
  if (a.is_zero() || b.is_zero()) return GradedIdeal::zero(a.ring());
  TermOrder order({0, 0}, 1);
  const PrimeField& F = a.ring()->field();
  std::vector<SparseVector> inputs;
  for (auto& f : a.minimal_generators())
    inputs.push_back(to_sparse(Column{f, f}, order, F));
  for (auto& g : b.minimal_generators())
    inputs.push_back(to_sparse(Column{g, a.ring()->zero()}, order, F));
  auto gb = ModuleGroebnerBasis::compute(F, order, std::move(inputs));
  GradedIdeal result(a.ring(), second_block(a.ring(), gb));
  return GradedIdeal(a.ring(), result.minimal_generators());
}

GradedIdeal quotient(const GradedIdeal& I, const Polynomial& g) {
  if (g.ring() && g.ring() != I.ring()) throw UsageError("polynomial belongs to a different ring");
  if (!g.is_homogeneous()) throw UsageError("quotient by an inhomogeneous element");
  if (I.contains(g)) return GradedIdeal::unit(I.ring());
  TermOrder order({0, g.degree()}, 1);
  const PrimeField& F = I.ring()->field();
  std::vector<SparseVector> inputs;
  inputs.push_back(to_sparse(Column{g, I.ring()->one()}, order, F));
  for (auto& f : I.minimal_generators())
    inputs.push_back(to_sparse(Column{f, I.ring()->zero()}, order, F));
  auto gb = ModuleGroebnerBasis::compute(F, order, std::move(inputs));
  GradedIdeal result(I.ring(), second_block(I.ring(), gb));
  return GradedIdeal(I.ring(), result.minimal_generators());
}

GradedIdeal quotient(const GradedIdeal& I, const GradedIdeal& J) {
  if (I.ring() != J.ring()) throw UsageError("ideals belong to different rings");
  std::optional<GradedIdeal> acc;
  for (auto& g : J.minimal_generators()) {
    GradedIdeal q = quotient(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc ? *acc : GradedIdeal::unit(I.ring());
}

GradedIdeal saturate(const GradedIdeal& I, const GradedIdeal& J) {
  GradedIdeal cur = I;
  for (;;) {
    GradedIdeal next = quotient(cur, J);
    if (next == cur) return cur;
    cur = next;
  }
}

GradedIdeal saturate(const GradedIdeal& I) { return saturate(I, GradedIdeal::irrelevant(I.ring())); }

bool is_saturated(const GradedIdeal& I) {
  return quotient(I, GradedIdeal::irrelevant(I.ring())) == I;
}

std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       EngineOptions options) {
  std::vector<SparseVector> inputs;
  for (auto& g : gens) {
    if (g.ring() && g.ring() != ring) throw UsageError("polynomial belongs to a different ring");
    inputs.push_back(to_sparse1(g));
  }
  auto gb = ModuleGroebnerBasis::compute(ring->field(), rank_one_order(), std::move(inputs), 0, options);
  std::vector<Polynomial> out;
  for (auto& e : gb.elements()) out.push_back(from_sparse1(ring, e));
  return out;
}

std::vector<Polynomial> eliminate(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                  VariableMask variables) {
  TermOrder order({0}, 0, variables);
  const PrimeField& F = ring->field();
  std::vector<SparseVector> inputs;
  for (auto& g : gens) {
    if (g.ring() && g.ring() != ring) throw UsageError("polynomial belongs to a different ring");
    inputs.push_back(to_sparse(Column{g}, order, F));
  }
  auto gb = ModuleGroebnerBasis::compute(F, order, std::move(inputs));
  std::vector<Polynomial> out;
  for (auto& e : gb.elements()) {
    if (e[0].mono.masked_degree(variables) != 0) continue;
    std::vector<Term> terms;
    for (auto& t : e) terms.push_back(Term{t.coeff, t.mono});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

GradedIdeal eliminate(const GradedIdeal& I, VariableMask variables) {
  return GradedIdeal(I.ring(), eliminate(I.ring(), I.generators(), variables));
}

}  // namespace gliaison
