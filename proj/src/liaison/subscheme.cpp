#include "gliaison/liaison/subscheme.hpp"

#include <mutex>

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"

namespace gliaison {

struct Subscheme::Cache {
  std::once_flag once;
  std::unique_ptr<FreeResolution> resolution;
};

namespace {

GradedIdeal with_modulus(const Ring& context, const GradedIdeal& I) {
  if (!context.has_modulus() || I.contains(context.modulus())) return I;
  auto gens = I.generators();
  gens.push_back(context.modulus());
  return GradedIdeal(I.ring(), gens);
}

}  // namespace

Subscheme::Subscheme(Ring context, GradedIdeal ideal)
    : context_(std::move(context)), ideal_(with_modulus(context_, ideal)), cache_(std::make_shared<Cache>()) {
  if (ideal_.ring() != context_.ambient()) throw UsageError("ideal and context use different rings");
  if (!is_saturated(ideal_)) throw UsageError("subscheme ideal is not saturated: " + ideal_.to_string());
}

Subscheme Subscheme::from_generators(const Ring& context, std::vector<Polynomial> gens) {
  if (context.has_modulus()) gens.push_back(context.modulus());
  return Subscheme(context, saturate(GradedIdeal(context.ambient(), std::move(gens))));
}

int Subscheme::dimension() const { return ideal_.krull_dimension() - 1; }

int Subscheme::codimension() const {
  int k = ideal_.krull_dimension();
  return static_cast<int>(ring()->nvars()) - std::max(k, 0);
}

int Subscheme::codimension_in_context() const { return codimension() - (context_.has_modulus() ? 1 : 0); }

long long Subscheme::degree() const { return ideal_.degree(); }

const FreeResolution& Subscheme::resolution() const {
  std::call_once(cache_->once, [this] {
    cache_->resolution = std::make_unique<FreeResolution>(resolve_quotient(Ring(ring()), ideal_));
  });
  return *cache_->resolution;
}

ModulePresentation Subscheme::ideal_module() const { return ModulePresentation::ideal_module(context_, ideal_); }

std::string Subscheme::describe() const {
  return "dim " + std::to_string(dimension()) + ", degree " + std::to_string(degree()) + ": " + ideal_.to_string();
}

bool is_acm(const Subscheme& s) { return s.projective_dimension() == s.codimension(); }

bool is_ag(const Subscheme& s) {
  if (!is_acm(s)) return false;
  return s.betti().total(s.projective_dimension()) == 1;
}

bool is_ci(const Subscheme& s) {
  return static_cast<int>(s.ideal().minimal_generators().size()) == s.codimension();
}

bool is_ci_in_context(const Subscheme& s) {
  if (!s.context().has_modulus()) return is_ci(s);
  auto cols = s.ideal_module().num_generators();
  return static_cast<int>(cols) == s.codimension_in_context();
}

bool is_unmixed(const Subscheme& s) {
  const FreeResolution& res = s.resolution();
  const int c = s.codimension();
  const int v = static_cast<int>(s.ring()->nvars());
  for (int j = c + 1; j <= res.length(); ++j) {
    ModulePresentation E = ext(res, j).module;
    if (E.is_zero()) continue;
    if (v - E.krull_dimension() < j + 1) return false;
  }
  return true;
}

}  // namespace gliaison
