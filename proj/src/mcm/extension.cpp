#include "gliaison/mcm/extension.hpp"

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"

namespace gliaison {

namespace {

// sum_k A(t_k), with blocks of A's generators
ModulePresentation hom_free_into(const Degrees& free_degrees, const ModulePresentation& A) {
  ModulePresentation out = ModulePresentation::free(A.ring(), {});
  bool first = true;
  for (int t : free_degrees) {
    ModulePresentation block = A.twisted(t);
    out = first ? block : direct_sum(out, block);
    first = false;
  }
  return out;
}

// Matrix of Hom(F, A) -> Hom(G, A), precomposition with d: G -> F.
Matrix precompose(const Matrix& d, std::size_t nA) {
  const RingPtr& P = d.ring();
  Matrix out(P, d.cols() * nA, d.rows() * nA);
  for (std::size_t m = 0; m < d.cols(); ++m)
    for (std::size_t k = 0; k < d.rows(); ++k)
      if (!d(k, m).is_zero())
        for (std::size_t a = 0; a < nA; ++a) out.at(m * nA + a, k * nA + a) = d(k, m);
  return out;
}

bool lex_less(const Column& a, const Column& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return !a[i].is_zero();
    if (a[i].is_zero()) continue;
    int c = grevlex_compare(a[i].leading_term().mono, b[i].leading_term().mono);
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

Ext1 ext1(const ModulePresentation& B, const ModulePresentation& A) {
  if (A.ring() != B.ring()) throw UsageError("Ext^1 of modules over different rings");
  const Ring& ring = A.ring();
  const RingPtr& P = ring.ambient();
  const std::size_t nA = A.num_generators();
  FreeResolution res = resolve(B, 2);
  ModulePresentation Bmin(res.maps.empty() ? GradedMap::zero(ring, res.modules[0], {}) : res.maps[0]);
  const Degrees& F0 = res.modules[0];
  const Degrees F1 = res.modules.size() > 1 ? res.modules[1] : Degrees{};
  const Degrees F2 = res.modules.size() > 2 ? res.modules[2] : Degrees{};
  ModulePresentation H0 = hom_free_into(F0, A), H1 = hom_free_into(F1, A), H2 = hom_free_into(F2, A);
  if (F1.empty()) return Ext1{ModulePresentation::free(ring, {}), Matrix(P, 0, 0), Bmin, A};
  Matrix d1 = res.maps[0].matrix();
  Matrix d2 = res.maps.size() > 1 ? res.maps[1].matrix() : Matrix(P, F1.size(), 0);
  // cocycles: kernel of Hom(F1, A) -> Hom(F2, A)
  Matrix Kfree = Matrix::identity(P, H1.num_generators());
  Degrees kdeg = H1.degrees();
  if (!F2.empty()) {
    Subquotient K = kernel(ModuleMap{H1, H2, precompose(d2, nA)});
    Kfree = K.generators;
    kdeg = K.module.degrees();
  }
  // coboundaries: image of Hom(F0, A), together with the relations of Hom(F1, A)
  Matrix B0 = precompose(d1, nA);
  Matrix rels = B0.hconcat(H1.relations().matrix());
  Degrees rdeg = concat(H0.degrees(), H1.relations().source());
  Subquotient E = subquotient(ring, H1.degrees(), Kfree, kdeg, rels, rdeg);
  return Ext1{E.module, E.generators, Bmin, A};
}

std::size_t canonical_generator(const Ext1& e) {
  const auto& d = e.module.degrees();
  if (d.empty()) throw DomainError("Ext^1 vanishes; there is no nonzero class");
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] < d[best] || (d[i] == d[best] && lex_less(e.cocycles.column(i), e.cocycles.column(best)))) best = i;
  }
  return best;
}

ExtensionClass extension_class(const Ext1& e, std::size_t g) {
  if (g >= e.module.num_generators()) throw UsageError("no such Ext^1 generator");
  const std::size_t nA = e.sub.num_generators();
  const std::size_t n1 = e.quotient.relations().source().size();
  Column c = e.cocycles.column(g);
  Matrix xi(e.sub.ring().ambient(), nA, n1);
  for (std::size_t k = 0; k < n1; ++k)
    for (std::size_t a = 0; a < nA; ++a) xi.at(a, k) = c[k * nA + a];
  return ExtensionClass{e.sub, e.quotient, xi, e.module.degrees()[g]};
}

ExtensionClass zero_class(const ModulePresentation& sub, const ModulePresentation& quotient) {
  return ExtensionClass{sub, quotient,
                        Matrix(sub.ring().ambient(), sub.num_generators(), quotient.relations().source().size()), 0};
}

Extension extension_module(const ExtensionClass& c) {
  const ModulePresentation& A = c.sub;
  ModulePresentation B = c.quotient.twisted(-c.degree);
  if (A.ring() != B.ring()) throw UsageError("extension of modules over different rings");
  if (c.cocycle.rows() != A.num_generators() || c.cocycle.cols() != B.relations().source().size())
    throw UsageError("cocycle has the wrong shape");
  // the cocycle must vanish on the second syzygies of B
  GradedMap d2 = kernel(B.relations());
  Matrix comp = c.cocycle * d2.matrix();
  for (auto& col : comp.columns())
    if (!is_zero_element(A, col)) throw UsageError("cocycle does not vanish on second syzygies");
  Matrix top = A.relations().matrix().hconcat(c.cocycle);
  Matrix bottom = Matrix(A.ring().ambient(), B.num_generators(), A.relations().source().size())
                      .hconcat(B.relations().matrix());
  ModulePresentation E(GradedMap(A.ring(), concat(A.degrees(), B.degrees()),
                                 concat(A.relations().source(), B.relations().source()), top.vconcat(bottom)));
  Extension out{E, false, false};
  out.hilbert_additive = E.hilbert_series() == A.hilbert_series() + B.hilbert_series();
  BettiTable be = resolve(E.over_ambient()).betti();
  BettiTable bs = resolve(direct_sum(A, B).over_ambient()).betti();
  out.split = be == bs;
  return out;
}

Matrix IdealExtension::sub_inclusion() const {
  const std::size_t n = module.num_generators(), l = sub_degrees.size();
  Matrix m(module.ring().ambient(), n, l);
  for (std::size_t j = 0; j < l; ++j) m.at(n - l + j, j) = module.ring().poly().one();
  return m;
}

IdealExtension ideal_extension(const Ring& ring, const GradedIdeal& I, bool all_generators) {
  ModulePresentation B = ModulePresentation::ideal_module(ring, I);
  std::vector<Column> cols;
  for (auto& g : I.minimal_generators()) cols.push_back({g});
  cols = minimal_columns(ring, {0}, cols);
  std::vector<Polynomial> gens;
  for (auto& c : cols) gens.push_back(c[0]);
  Ext1 e = ext1(B, ModulePresentation::free(ring, {0}));
  if (e.quotient.num_generators() != gens.size()) throw DomainError("ideal presentation is not minimal");
  std::vector<std::size_t> chosen;
  if (all_generators) {
    for (std::size_t g = 0; g < e.module.num_generators(); ++g) chosen.push_back(g);
  } else {
    chosen.push_back(canonical_generator(e));
  }
  const std::size_t n1 = e.quotient.relations().source().size();
  Degrees sub;
  Matrix xi(ring.ambient(), chosen.size(), n1);
  for (std::size_t r = 0; r < chosen.size(); ++r) {
    ExtensionClass c = extension_class(e, chosen[r]);
    sub.push_back(-c.degree);
    for (std::size_t k = 0; k < n1; ++k) xi.at(r, k) = c.cocycle(0, k);
  }
  // ideal generators first, then L; relation k is (d1_k, -xi_k)
  const ModulePresentation& Q = e.quotient;
  ModulePresentation N(GradedMap(ring, concat(Q.degrees(), sub), Q.relations().source(),
                                 Q.relations().matrix().vconcat(-xi)));
  return IdealExtension{N, sub, gens, e.module.num_generators()};
}

}  // namespace gliaison
