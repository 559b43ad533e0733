#include "gliaison/mcm/serre.hpp"

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"

namespace gliaison {

namespace {

HilbertSeries ring_series(const Ring& ring) { return ModulePresentation::free(ring, {0}).hilbert_series(); }

// Series of I_{Y,X} as a module over the context ring.
HilbertSeries ideal_series(const Subscheme& Y) {
  return ring_series(Y.context()) - Y.ideal().hilbert_series();
}

std::vector<Polynomial> evaluate_dual(const Ring& ring, const Matrix& dual_gens, const Column& v) {
  std::vector<Polynomial> out;
  for (std::size_t g = 0; g < dual_gens.cols(); ++g) {
    Polynomial acc = ring.poly().zero();
    for (std::size_t j = 0; j < v.size(); ++j) acc += dual_gens(j, g) * v[j];
    acc = reduce_mod(ring, acc);
    if (!acc.is_zero()) out.push_back(acc);
  }
  return out;
}

bool same_polynomial(const HilbertSeries& a, const HilbertSeries& b) {
  for (int n = 200; n < 200 + static_cast<int>(a.nvars()) + 2; ++n)
    if (a.value(n) != b.value(n)) return false;
  return true;
}

}  // namespace

int module_rank(const ModulePresentation& N) {
  HilbertSeries h = N.hilbert_series(), r = ring_series(N.ring());
  if (h.is_zero() || h.krull_dimension() < r.krull_dimension()) return 0;
  if (h.multiplicity() % r.multiplicity()) throw DomainError("module rank is not an integer");
  return static_cast<int>(h.multiplicity() / r.multiplicity());
}

Column SerreSheaf::section() const {
  Matrix m = extension.sub_inclusion();
  return m.column(0);
}

SerreSheaf serre_sheaf_from_ag(const Subscheme& Y) {
  if (Y.codimension_in_context() != 2) throw UsageError("Serre correspondence needs codimension 2 in the context");
  IdealExtension e = ideal_extension(Y.context(), Y.ideal(), false);
  if (e.ext_generators != 1)
    throw DomainError("Ext^1(I_Y, R) has " + std::to_string(e.ext_generators) +
                      " generators; Y is not arithmetically Gorenstein");
  SerreSheaf out{e, e.sub_degrees[0], std::nullopt};
  if (Y.context().has_modulus()) out.acm = acm_module_check(e.module);
  return out;
}

std::optional<SerreSection> serre_subscheme_of_section(const ModulePresentation& N, int a, const Column& s) {
  const Ring& ring = N.ring();
  if (module_rank(N) != 2) throw UsageError("the Serre correspondence needs a rank 2 module");
  ExtModule dual = hom_to_ring_with_generators(N);
  auto gens = evaluate_dual(ring, dual.cocycles, s);
  if (gens.empty()) return std::nullopt;
  Subscheme Y = Subscheme::from_generators(ring, gens);
  if (Y.codimension_in_context() != 2 || !is_ag(Y)) return std::nullopt;
  HilbertSeries target = N.twisted(a).hilbert_series() - ring_series(ring);
  HilbertSeries iy = ideal_series(Y);
  for (int b = -40; b <= 40; ++b) {
    HilbertSeries twisted = iy.shifted(-b);
    if (same_polynomial(twisted, target)) return SerreSection{Y, b, s, twisted == target, 1};
  }
  return std::nullopt;
}

SerreSection serre_subscheme_from_section(const ModulePresentation& N, int a, std::uint64_t seed, int retries) {
  if (module_rank(N) != 2) throw UsageError("serre_subscheme_from_section needs a rank 2 module");
  SeedStream rng(seed);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    if (auto r = serre_subscheme_of_section(N, a, random_module_element(N, a, rng))) {
      r->attempts = attempt;
      return *r;
    }
  }
  throw GenericityError("no section of degree " + std::to_string(a) + " gave an AG codimension 2 subscheme in " +
                        std::to_string(retries) + " attempts");
}

SerreSection serre_subscheme_through(const ModulePresentation& N, int a, const GradedIdeal& Z, std::uint64_t seed,
                                     int retries) {
  const Ring& ring = N.ring();
  if (module_rank(N) != 2) throw UsageError("serre_subscheme_through needs a rank 2 module");
  // sections s with w(s) in I_Z for every w in Hom(N, R)
  ExtModule dual = hom_to_ring_with_generators(N);
  const std::size_t nw = dual.module.num_generators();
  ModulePresentation target = ModulePresentation::free(ring, {});
  for (std::size_t g = 0; g < nw; ++g)
    target = direct_sum(target, ModulePresentation::cyclic_quotient(ring, Z).twisted(dual.module.degrees()[g]));
  ModuleMap eval{N, target, dual.cocycles.transpose()};
  Subquotient vanishing = kernel(eval);
  SeedStream rng(seed);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    Column c = random_module_element(vanishing.module, a, rng);
    Column s = reduce_mod(ring, vanishing.generators * c);
    bool zero = true;
    for (auto& p : s) zero = zero && p.is_zero();
    if (zero) throw GenericityError("no section of degree " + std::to_string(a) + " vanishes on the given subscheme");
    if (auto r = serre_subscheme_of_section(N, a, s)) {
      r->attempts = attempt;
      return *r;
    }
  }
  throw GenericityError("no section of degree " + std::to_string(a) + " through the given subscheme gave an AG " +
                        "codimension 2 subscheme in " + std::to_string(retries) + " attempts");
}

SurfaceFromSheaf rank1_acm_to_surface(const ModulePresentation& L, int lo, int hi, std::uint64_t seed) {
  const Ring& ring = L.ring();
  if (module_rank(L) != 1) throw UsageError("rank1_acm_to_surface needs a rank 1 module");
  ExtModule dual = hom_to_ring_with_generators(L);
  const Degrees& gdeg = dual.module.degrees();
  SeedStream rng(seed);
  HilbertSeries Lser = L.hilbert_series();
  auto attempt = [&](const Column& w, int a) -> std::optional<SurfaceFromSheaf> {
    std::vector<Polynomial> gens;
    for (auto& p : w)
      if (!p.is_zero()) gens.push_back(p);
    if (gens.empty()) return std::nullopt;
    Subscheme S = Subscheme::from_generators(ring, gens);
    if (S.codimension_in_context() != 1 || !is_acm(S)) return std::nullopt;
    // L(-a) and I_{S,X} must have the same Hilbert series
    if (Lser.shifted(a) != ideal_series(S)) return std::nullopt;
    return SurfaceFromSheaf{S, a, w};
  };
  for (int a = lo; a <= hi; ++a) {
    for (std::size_t g = 0; g < gdeg.size(); ++g) {
      if (gdeg[g] != a) continue;
      if (auto r = attempt(dual.cocycles.column(g), a)) return *r;
    }
    for (int k = 0; k < 4; ++k) {
      Column w(L.num_generators(), ring.poly().zero());
      bool any = false;
      for (std::size_t g = 0; g < gdeg.size(); ++g) {
        if (gdeg[g] > a) continue;
        Polynomial c = random_homogeneous(ring.ambient(), a - gdeg[g], rng);
        if (c.is_zero()) continue;
        any = true;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = reduce_mod(ring, w[j] + c * dual.cocycles(j, g));
      }
      if (!any) break;
      if (auto r = attempt(w, a)) return *r;
    }
  }
  throw GenericityError("no embedding of a twist of the module as a surface ideal for a in [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace gliaison
