#include <catch_amalgamated.hpp>

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"
#include "gliaison/liaison/linkage.hpp"
#include "gliaison/mcm/acm.hpp"
#include "gliaison/mcm/extension.hpp"
#include "gliaison/mcm/factorization.hpp"
#include "gliaison/mcm/serre.hpp"
#include "support.hpp"

using namespace gliaison;
using namespace testing_support;

namespace {

Matrix mat(const RingPtr& R, const std::vector<std::vector<std::string>>& rows) {
  Matrix m(R, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = poly(R, rows[i][j]);
  return m;
}

MatrixFactorization mf(const RingPtr& R, const std::string& f, Degrees tgt, Degrees src,
                       const std::vector<std::vector<std::string>>& phi,
                       const std::vector<std::vector<std::string>>& psi) {
  Ring P(R);
  Polynomial fp = poly(R, f);
  const int d = static_cast<int>(fp.degree());
  return MatrixFactorization{fp, GradedMap(P, tgt, src, mat(R, phi)),
                             GradedMap(P, src, shifted(tgt, d), mat(R, psi)), 0};
}

// Independent check of the two products, entry by entry.
bool products_are_f(const MatrixFactorization& m) {
  const Matrix& a = m.phi.matrix();
  const Matrix& b = m.psi.matrix();
  for (const Matrix& p : {a * b, b * a})
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (p(i, j) != (i == j ? m.f : m.f.ring()->zero())) return false;
  return true;
}

Polynomial random_linear(const RingPtr& R, std::size_t nvars, SeedStream& rng) {
  Polynomial p = R->zero();
  for (std::size_t v = 0; v < nvars; ++v) p += R->variable(v) * R->constant(rng.coefficient(R->field()));
  return p;
}

struct P4 {
  RingPtr R = PolynomialRing::create(32003, 5);
  Ring smooth{R, poly(R, "x0*x1 + x2*x3 + x4^2")};
  Ring cone{R, poly(R, "x0*x3 - x1*x2")};
};

}  // namespace

TEST_CASE("verifying small matrix factorizations", "[mcm]") {
  auto R = PolynomialRing::create(32003, 4);
  MatrixFactorization one = mf(R, "x0*x1", {0}, {1}, {{"x0"}}, {{"x1"}});
  MfReport r = mf_verify(one);
  CHECK(r.valid);
  // f is reducible: coker phi has rank 1 on x0 = 0 and rank 0 on x1 = 0
  CHECK(r.rank == -1);

  MatrixFactorization two = mf(R, "x0*x1 + x2*x3", {0, 0}, {1, 1}, {{"x2", "x0"}, {"x1", "-x3"}},
                               {{"x3", "x0"}, {"x1", "-x2"}});
  CHECK(mf_verify(two).valid);
  CHECK(products_are_f(two));

  MatrixFactorization bad = mf(R, "x0*x1", {0}, {1}, {{"x0"}}, {{"x0"}});
  MfReport rb = mf_verify(bad);
  CHECK_FALSE(rb.valid);
  bool named = false;
  for (auto& c : rb.checks)
    if (!c.passed && c.detail.find("(0,0)") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("completing a matrix factorization", "[mcm]") {
  auto R = PolynomialRing::create(32003, 4);
  Ring P(R);
  MatrixFactorization sq = mf_complete(GradedMap(P, {0}, {2}, mat(R, {{"x0^2"}})), poly(R, "x0^2"));
  CHECK(sq.psi.matrix()(0, 0) == R->one());
  CHECK(mf_verify(sq).valid);

  MatrixFactorization two = mf_complete(GradedMap(P, {0, 0}, {1, 1}, mat(R, {{"x2", "x0"}, {"x1", "-x3"}})),
                                        poly(R, "x0*x1 + x2*x3"));
  CHECK(two.psi.matrix() == mat(R, {{"x3", "x0"}, {"x1", "-x2"}}));
  CHECK_THROWS_AS(mf_complete(GradedMap(P, {0}, {1}, mat(R, {{"x0"}})), poly(R, "x1^2")), DomainError);
}

TEST_CASE("knoerrer steps", "[mcm]") {
  auto R = PolynomialRing::create(32003, 5);
  MatrixFactorization base = mf(R, "x0*x1", {0}, {1}, {{"x0"}}, {{"x1"}});
  MatrixFactorization c = knoerrer_double_cover(base, poly(R, "x2"));
  CHECK(c.phi.matrix() == mat(R, {{"x2", "x0"}, {"x1", "-x2"}}));
  CHECK(c.f == poly(R, "x0*x1 + x2^2"));
  CHECK(mf_verify(c).valid);
  MatrixFactorization cc = knoerrer_double_cover(c, poly(R, "x3"));
  CHECK(cc.phi.matrix().rows() == 4);
  CHECK(mf_verify(cc).valid);

  MatrixFactorization xy = knoerrer_xy(base, poly(R, "x2"), poly(R, "x3"));
  CHECK(xy.phi.matrix() == mat(R, {{"x2", "x0"}, {"x1", "-x3"}}));
  CHECK(xy.psi.matrix() == mat(R, {{"x3", "x0"}, {"x1", "-x2"}}));
  MatrixFactorization spinor = knoerrer_double_cover(xy, poly(R, "x4"));
  CHECK(spinor.f == poly(R, "x0*x1 + x2*x3 + x4^2"));
  MfReport r = mf_verify(spinor);
  CHECK(r.valid);
  CHECK(r.rank == 2);
  CHECK_THROWS_AS(knoerrer_xy(base, poly(R, "x2"), poly(R, "x2")), UsageError);
  CHECK_THROWS_AS(knoerrer_double_cover(base, poly(R, "x0")), UsageError);

  // the 4x4 phi determines its partner
  MatrixFactorization back = mf_complete(spinor.phi, spinor.f);
  CHECK(back.psi.matrix() == spinor.psi.matrix());
}

TEST_CASE("knoerrer steps of random factorizations stay valid", "[mcm][property]") {
  auto R = PolynomialRing::create(32003, 8);
  Ring P(R);
  SeedStream rng(2024);
  for (int round = 0; round < 120; ++round) {
    Polynomial a = random_linear(R, 4, rng), b = random_linear(R, 4, rng);
    auto make_base = [&]() {
      if (round % 2) {
        Polynomial c = random_linear(R, 4, rng), d = random_linear(R, 4, rng);
        Matrix phi(R, 2, 2), psi(R, 2, 2);
        phi.at(0, 0) = a, phi.at(0, 1) = b, phi.at(1, 0) = c, phi.at(1, 1) = d;
        psi.at(0, 0) = d, psi.at(0, 1) = -b, psi.at(1, 0) = -c, psi.at(1, 1) = a;
        return MatrixFactorization{a * d - b * c, GradedMap(P, {0, 0}, {1, 1}, phi),
                                   GradedMap(P, {1, 1}, {2, 2}, psi), 0};
      }
      Matrix phi(R, 1, 1), psi(R, 1, 1);
      phi.at(0, 0) = a, psi.at(0, 0) = b;
      return MatrixFactorization{a * b, GradedMap(P, {0}, {1}, phi), GradedMap(P, {1}, {2}, psi), 0};
    };
    MatrixFactorization base = make_base();
    if (base.f.is_zero()) continue;
    INFO("round " << round);
    REQUIRE(mf_verify(base).valid);
    MatrixFactorization up = (round % 3 == 0) ? knoerrer_double_cover(base, R->variable(4))
                                              : knoerrer_xy(base, R->variable(4), R->variable(5));
    CHECK(mf_verify(up).valid);
    CHECK(products_are_f(up));
    if (round % 4 == 0) {
      MatrixFactorization twice = knoerrer_double_cover(up, R->variable(6));
      CHECK(mf_verify(twice).valid);
      CHECK(products_are_f(twice));
    }
  }
}

TEST_CASE("acm checks on hypersurfaces", "[mcm]") {
  P4 q;
  AcmCheck ox = acm_module_check(ModulePresentation::free(q.cone, {0}));
  CHECK(ox.acm);
  CHECK(ox.cohomology_vanishes());

  AcmCheck d = acm_module_check(ModulePresentation::ideal_module(q.cone, ideal(q.R, {"x0", "x1", "x0*x3 - x1*x2"})));
  CHECK(d.acm);
  CHECK(d.rank == 1);
  REQUIRE(d.report);
  CHECK(d.report->valid);
  CHECK(d.cohomology_vanishes());

  Subscheme skew = Subscheme::from_generators(q.smooth, polys(q.R, {"x0*x1", "x0*x3", "x2*x1", "x2*x3", "x4"}));
  AcmCheck s = acm_module_check(skew.ideal_module());
  CHECK_FALSE(s.acm);
  CHECK(s.h1 == std::map<int, long long>{{0, 1}});
  CHECK_FALSE(s.cohomology_vanishes());
}

TEST_CASE("two-periodic resolution of the spinor module", "[mcm]") {
  auto R = PolynomialRing::create(32003, 5);
  MatrixFactorization base = mf(R, "x0*x1", {0}, {1}, {{"x0"}}, {{"x1"}});
  MatrixFactorization sp = knoerrer_double_cover(knoerrer_xy(base, poly(R, "x2"), poly(R, "x3")), poly(R, "x4"));
  Ring X(R, sp.f);
  FreeResolution res = resolve(ModulePresentation(sp.phi).over(X), 4);
  REQUIRE(res.maps.size() >= 3);
  // F2 -> F1 is psi and F3 -> F2 is phi again, up to twist
  BettiTable b = res.betti();
  for (int i = 1; i + 2 <= b.length(); ++i) CHECK(b.total(i) == 4);
  CHECK(b.at(2, 2) == 4);
  CHECK(b.at(3, 3) == 4);
}

TEST_CASE("extension modules", "[mcm]") {
  P4 q;
  ModulePresentation a = ModulePresentation::ideal_module(q.cone, ideal(q.R, {"x0", "x1", "x0*x3 - x1*x2"}));
  ModulePresentation b =
      ModulePresentation::ideal_module(q.cone, ideal(q.R, {"x0", "x2", "x0*x3 - x1*x2"})).twisted(1);
  Extension split = extension_module(zero_class(a, b));
  CHECK(split.split);
  CHECK(split.hilbert_additive);

  Ext1 e = ext1(b, a);
  REQUIRE(e.module.num_generators() >= 1);
  Extension cone = extension_module(extension_class(e, canonical_generator(e)));
  CHECK(cone.hilbert_additive);
  CHECK_FALSE(cone.split);
  ModulePresentation m = minimal_presentation(cone.module);
  CHECK(m.num_generators() == 2);
  CHECK(m.relations().source().empty());

  // k by k(-1) over two variables
  auto R2 = PolynomialRing::create(32003, 2);
  Ring P(R2);
  ModulePresentation k = ModulePresentation::cyclic_quotient(P, ideal(R2, {"x0", "x1"}));
  Ext1 kk = ext1(k.twisted(-1), k);
  REQUIRE(kk.module.num_generators() == 2);
  ExtensionClass c0 = extension_class(kk, 0), c1 = extension_class(kk, 1);
  ExtensionClass generic{c0.sub, c0.quotient, c0.cocycle + c1.cocycle * Matrix::scalar(R2, c1.cocycle.cols(), R2->constant(5)), c0.degree};
  Extension g = extension_module(generic);
  CHECK(g.hilbert_additive);
  CHECK_FALSE(g.split);
  CHECK(extension_module(zero_class(k, k.twisted(-1))).split);
}

TEST_CASE("serre correspondence for a line on the smooth quadric", "[mcm][serre]") {
  P4 q;
  Subscheme line(q.smooth, ideal(q.R, {"x0", "x2", "x4", "x0*x1 + x2*x3 + x4^2"}));
  SerreSheaf s = serre_sheaf_from_ag(line);
  REQUIRE(s.acm);
  CHECK(s.acm->acm);
  CHECK(s.acm->rank == 2);
  CHECK(s.acm->cohomology_vanishes());
  CHECK(module_rank(s.extension.module) == 2);
  CHECK(s.a == 1);

  // same Betti table as the spinor module of the Knoerrer tower, up to twist
  MatrixFactorization base = mf(q.R, "x0*x1", {0}, {1}, {{"x0"}}, {{"x1"}});
  MatrixFactorization sp =
      knoerrer_double_cover(knoerrer_xy(base, poly(q.R, "x2"), poly(q.R, "x3")), poly(q.R, "x4"));
  BettiTable spin = resolve(ModulePresentation(sp.phi)).betti();
  BettiTable ours = s.acm->ambient_betti;
  bool translate = false;
  for (int h = -4; h <= 4; ++h) translate = translate || spin.shifted(h) == ours;
  CHECK(translate);

  // round trip: a section of the canonical degree recovers a line
  SerreSection back = serre_subscheme_from_section(s.extension.module, s.a, 5);
  CHECK(back.subscheme.degree() == 1);
  CHECK(back.subscheme.ideal().hilbert_series() == line.ideal().hilbert_series());
  CHECK(back.exact);

  // one degree higher the section vanishes on an elliptic quintic
  SerreSection quintic = serre_subscheme_from_section(s.extension.module, s.a + 1, 6);
  CHECK(quintic.subscheme.degree() == 5);
  CHECK(is_ag(quintic.subscheme));
  SerreSheaf e5 = serre_sheaf_from_ag(quintic.subscheme);
  REQUIRE(e5.acm);
  CHECK(e5.acm->acm);
  CHECK(e5.acm->rank == 2);
}

TEST_CASE("serre correspondence for a conic splits", "[mcm][serre]") {
  P4 q;
  Subscheme conic = complete_intersection(q.smooth, polys(q.R, {"x3", "x4"}));
  SerreSheaf s = serre_sheaf_from_ag(conic);
  ModulePresentation m = minimal_presentation(s.extension.module);
  CHECK(m.relations().source().empty());
  CHECK(m.degrees() == Degrees{1, 1});
  CHECK(s.a == 2);

  // sections of degree 2 of R + R(-1): forms of degrees 2 and 1
  SerreSection back = serre_subscheme_from_section(ModulePresentation::free(q.smooth, {0, 1}), 2, 3);
  CHECK(is_ci_in_context(back.subscheme));
  CHECK(back.subscheme.degree() == 4);
  CHECK_THROWS_AS(serre_subscheme_from_section(ModulePresentation::free(q.smooth, {0}), 0, 3), UsageError);
}

TEST_CASE("rank one acm modules are surface ideals", "[mcm]") {
  P4 q;
  SurfaceFromSheaf h = rank1_acm_to_surface(ModulePresentation::free(q.cone, {0}), 0, 2);
  CHECK(h.surface.degree() == 2);
  CHECK(h.a == 1);

  // I_D is isomorphic to the ideal of any plane of the same ruling
  const Polynomial f = q.cone.modulus();
  auto same_ruling = [&](const Subscheme& s) {
    return s.degree() == 1 && s.ideal().degree_part(1).size() == 2 &&
           ModulePresentation::ideal_module(q.cone, s.ideal()).hilbert_series() ==
               ModulePresentation::ideal_module(q.cone, ideal(q.R, {"x0", "x1", "x0*x3 - x1*x2"})).hilbert_series();
  };
  GradedIdeal d = ideal(q.R, {"x0", "x1"});
  SurfaceFromSheaf sd = rank1_acm_to_surface(ModulePresentation::ideal_module(q.cone, d + GradedIdeal(q.R, {f})), -2, 2);
  CHECK(sd.a == 0);
  CHECK(same_ruling(sd.surface));
  CHECK(sd.surface.ideal().contains(GradedIdeal(q.R, {f})));

  GradedIdeal e = ideal(q.R, {"x0", "x2"});
  SurfaceFromSheaf se =
      rank1_acm_to_surface(ModulePresentation::ideal_module(q.cone, e + GradedIdeal(q.R, {f})).twisted(1), -2, 2);
  CHECK(se.a == 1);
  CHECK(se.surface.degree() == 1);
  CHECK(se.surface.ideal().degree_part(1).size() == 2);
}
