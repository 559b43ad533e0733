#include "gliaison/liaison/ntype.hpp"

#include <algorithm>

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"
#include "gliaison/mcm/extension.hpp"
#include "gliaison/mcm/serre.hpp"

namespace gliaison {

namespace {

HilbertSeries ideal_module_series(const Subscheme& C) {
  return ModulePresentation::free(C.context(), {0}).hilbert_series() - C.ideal().hilbert_series();
}

GradedIdeal image_ideal(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  if (ring.has_modulus()) g.push_back(ring.modulus());
  return GradedIdeal(ring.ambient(), g);
}

Column dot_columns(const Ring& ring, const Matrix& m, const Column& w) {
  // m^T w
  Column out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Polynomial acc = ring.poly().zero();
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero() && !w[i].is_zero()) acc += m(i, j) * w[i];
    out.push_back(reduce_mod(ring, acc));
  }
  return out;
}

}  // namespace

NTypeResolution n_type_resolution(const Subscheme& C) {
  IdealExtension e = ideal_extension(C.context(), C.ideal(), true);
  std::vector<Polynomial> proj = e.ideal_generators;
  proj.resize(e.module.num_generators(), C.ring()->zero());
  return NTypeResolution{e.module, e.sub_degrees, e.sub_inclusion(), proj, 0};
}

NTypeCheck verify_ntype(const NTypeResolution& nt, const Subscheme& C, const RaoModule& rao) {
  NTypeCheck out;
  auto fail = [&](const std::string& why) {
    if (out.failure.empty()) out.failure = why;
  };
  const Ring& ring = nt.n.ring();
  ModulePresentation L = ModulePresentation::free(ring, nt.l);
  ModulePresentation Q = cokernel(ModuleMap{L, nt.n, nt.map});
  HilbertSeries ic = ideal_module_series(C).shifted(-nt.a);
  out.exact = Q.hilbert_series() == ic && nt.n.hilbert_series() == L.hilbert_series() + ic;
  if (!out.exact) fail("0 -> L -> N -> I_C(a) -> 0 is not Hilbert-exact");
  out.image_is_ideal = image_ideal(ring, nt.projection) == C.ideal();
  if (!out.image_is_ideal) fail("the projection does not generate I_C");
  CohomologyModule h1 = sheaf_cohomology(nt.n, 1), h2 = sheaf_cohomology(nt.n, 2);
  out.h1 = h1.hilbert_function;
  out.h2 = h2.hilbert_function;
  out.h1_finite = h1.finite_length;
  out.h2_finite = h2.finite_length;
  auto shift = table_translate(rao.hilbert, out.h1);
  out.h1_matches = h1.finite_length && shift && (rao.hilbert.empty() || *shift == -nt.a);
  if (!out.h1_matches) fail("H^1_*(N) is not M_C(a)");
  out.h2_zero = h2.finite_length && out.h2.empty();
  if (!out.h2_zero) fail("H^2_*(N) does not vanish");
  out.valid = out.failure.empty();
  return out;
}

ModulePresentation syzygy_dual(const ModulePresentation& N) {
  ModulePresentation m = minimal_presentation(N);
  if (m.relations().source().empty()) return ModulePresentation::free(N.ring(), {});
  ModulePresentation sigma(kernel(m.relations()));
  return hom_to_ring(sigma);
}

NTypeResolution link_transform_ntype(const NTypeResolution& nt, const Subscheme& C, const Subscheme& Y) {
  const Ring& ring = nt.n.ring();
  const RingPtr& P = ring.ambient();
  const ModulePresentation& N = nt.n;
  const std::size_t nN = N.num_generators(), nL = nt.l.size();

  // E with 0 -> R(-aY) -> E -> I_Y -> 0, twisted so that it maps to I_C(a)
  SerreSheaf serre = serre_sheaf_from_ag(Y);
  ModulePresentation E = serre.extension.module.twisted(nt.a);
  const std::size_t nE = E.num_generators(), nY = serre.extension.ideal_generators.size();

  // lift I_Y -> I_C(a) to c_j in N
  Degrees proj_deg;
  for (int g : N.degrees()) proj_deg.push_back(g + nt.a);
  std::vector<Column> proj_cols;
  for (auto& p : nt.projection) proj_cols.push_back({p});
  Lifter through_projection(ring, {0}, proj_deg, proj_cols);
  Matrix h(P, nN, nE);
  for (std::size_t j = 0; j < nY; ++j) {
    auto c = through_projection.lift({serre.extension.ideal_generators[j]});
    if (!c) throw DomainError("I_Y is not contained in I_C");
    for (std::size_t i = 0; i < nN; ++i) h.at(i, j) = (*c)[i];
  }
  // residual of each relation of E lies in the image of L: rho_k = alpha mu_k
  const Matrix& relE = E.relations().matrix();
  Matrix rho = h * relE;
  Lifter through_alpha(ring, N.degrees(), concat(nt.l, N.relations().source()),
                       nt.map.hconcat(N.relations().matrix()).columns());
  Matrix mu(P, nL, relE.cols());
  for (std::size_t k = 0; k < relE.cols(); ++k) {
    auto c = through_alpha.lift(rho.column(k));
    if (!c) throw DomainError("cone construction: a relation of E does not map into L");
    for (std::size_t i = 0; i < nL; ++i) mu.at(i, k) = (*c)[i];
  }
  // correction X = [kappa | lambda] with X relE = -mu; exists since Ext^1(E, R) = 0
  Matrix relT = relE.transpose();
  Lifter through_relE(ring, negated(E.relations().source()), negated(E.degrees()), relT.columns());
  Matrix X(P, nL, nE);
  for (std::size_t i = 0; i < nL; ++i) {
    Column target;
    for (std::size_t k = 0; k < relE.cols(); ++k) target.push_back(-mu(i, k));
    auto c = through_relE.lift(target);
    if (!c) throw DomainError("cone construction: the lift of I_Y -> I_C cannot be corrected");
    for (std::size_t j = 0; j < nE; ++j) X.at(i, j) = (*c)[j];
  }
  h = reduce_mod(ring, h + nt.map * X);
  const Column lambda = X.column(nE - 1);

  // duals: N^dual inside F^dual, E^dual inside F_E^dual
  ExtModule Nd = hom_to_ring_with_generators(N);
  ExtModule Ed = hom_to_ring_with_generators(E);
  const std::size_t nNd = Nd.module.num_generators();
  Lifter into_Ed(ring, negated(E.degrees()), Ed.module.degrees(), Ed.cocycles.columns());
  Matrix f1(P, nL + Ed.module.num_generators(), nNd);
  for (std::size_t g = 0; g < nNd; ++g) {
    Column w = Nd.cocycles.column(g);
    Column lpart = dot_columns(ring, nt.map, w);
    for (std::size_t i = 0; i < nL; ++i) f1.at(i, g) = lpart[i];
    auto epart = into_Ed.lift(dot_columns(ring, h, w));
    if (!epart) throw DomainError("cone construction: N^dual does not map into E^dual");
    for (std::size_t i = 0; i < epart->size(); ++i) f1.at(nL + i, g) = (*epart)[i];
  }
  ModulePresentation T = direct_sum(ModulePresentation::free(ring, negated(nt.l)), Ed.module);
  ModulePresentation Fd = ModulePresentation::free(ring, negated(N.degrees()));
  ModulePresentation Np = fibered_sum(Nd.module, T, Fd, f1, Nd.cocycles);

  // T^dual -> R(a'): evaluation at sigma = (-lambda, s)
  const int a_prime = serre.a - nt.a;
  Column s = serre.section();
  std::vector<Polynomial> proj;
  for (std::size_t i = 0; i < nL; ++i) proj.push_back(reduce_mod(ring, -lambda[i]));
  for (std::size_t g = 0; g < Ed.module.num_generators(); ++g) {
    Polynomial acc = P->zero();
    for (std::size_t j = 0; j < nE; ++j) acc += Ed.cocycles(j, g) * s[j];
    proj.push_back(reduce_mod(ring, acc));
  }
  proj.resize(Np.num_generators(), P->zero());
  Matrix incl(P, Np.num_generators(), Fd.num_generators());
  for (std::size_t j = 0; j < Fd.num_generators(); ++j) incl.at(T.num_generators() + j, j) = P->one();
  (void)C;
  return NTypeResolution{Np, Fd.degrees(), incl, proj, a_prime};
}

CurveFromRao curve_from_rao_module(const ModulePresentation& M, const Ring& context, std::uint64_t seed, int retries,
                                   int pad) {
  SeedStream rng(seed);
  ModulePresentation Mx = M.over(context);
  const RingPtr& P = context.ambient();
  if (Mx.is_zero()) {
    // any complete intersection curve is ACM
    std::size_t forms = context.nvars() - 2 - (context.has_modulus() ? 1 : 0);
    for (int attempt = 1; attempt <= retries; ++attempt) {
      std::vector<Polynomial> f;
      for (std::size_t i = 0; i < forms; ++i) f.push_back(random_homogeneous(P, 1, rng));
      auto gens = f;
      if (context.has_modulus()) gens.push_back(context.modulus());
      GradedIdeal I(P, gens);
      if (I.krull_dimension() != 2) continue;
      return CurveFromRao{Subscheme(context, I), 0, attempt, 0, 1};
    }
    throw GenericityError("no complete intersection curve found");
  }
  if (!Mx.is_finite_length()) throw UsageError("curve_from_rao_module needs a finite-length module");
  ModulePresentation Mstar = graded_dual(Mx).over(context);
  FreeResolution res = resolve(Mstar, 4);
  if (res.maps.size() < 3) throw DomainError("M* has projective dimension below 3; no syzygy sheaf of rank >= 2");
  ModulePresentation G = res.maps.size() >= 4 ? ModulePresentation(res.maps[3])
                                              : ModulePresentation::free(context, res.modules[3]);
  ModulePresentation Np = minimal_presentation(hom_to_ring(G));
  const int r = module_rank(Np);
  if (r < 2) throw DomainError("the dual syzygy module has rank " + std::to_string(r));
  Degrees gdeg = Np.degrees();
  std::sort(gdeg.begin(), gdeg.end());
  for (int attempt = 1; attempt <= retries; ++attempt) {
    const int p = pad + (attempt - 1) / 4;
    Degrees ldeg(gdeg.begin(), gdeg.begin() + std::min<std::size_t>(gdeg.size(), static_cast<std::size_t>(r - 1)));
    while (static_cast<int>(ldeg.size()) < r - 1) ldeg.push_back(gdeg.back());
    for (int& d : ldeg) d += p;
    std::vector<Column> cols;
    for (int d : ldeg) cols.push_back(random_module_element(Np, d, rng));
    ModuleMap phi{ModulePresentation::free(context, ldeg), Np, Matrix::from_columns(P, Np.num_generators(), cols)};
    ModulePresentation Q = cokernel(phi);
    if (module_rank(Q) != 1) continue;
    ExtModule Qd = hom_to_ring_with_generators(Q);
    if (Qd.module.num_generators() != 1) continue;
    const int t = Qd.module.degrees()[0];
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < Qd.cocycles.rows(); ++j)
      if (!Qd.cocycles(j, 0).is_zero()) gens.push_back(Qd.cocycles(j, 0));
    if (gens.empty()) continue;
    Subscheme Cp = Subscheme::from_generators(context, gens);
    if (Cp.dimension() != 1) continue;
    // Q must be the twisted saturated ideal itself
    if (Q.hilbert_series() != ideal_module_series(Cp).shifted(-t)) continue;
    return CurveFromRao{Cp, t, attempt, p, r};
  }
  throw GenericityError("no curve from the Rao module in " + std::to_string(retries) + " attempts");
}

}  // namespace gliaison
