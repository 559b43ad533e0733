#include <catch_amalgamated.hpp>

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"
#include "gliaison/liaison/linkage.hpp"
#include "gliaison/liaison/ntype.hpp"
#include "gliaison/liaison/rao.hpp"
#include "gliaison/mcm/serre.hpp"
#include "support.hpp"

using namespace gliaison;
using namespace testing_support;

namespace {

struct P3 {
  RingPtr R = PolynomialRing::create(32003, 4);
  Ring ctx{R};
  Subscheme sub(const std::vector<std::string>& g) const { return Subscheme(ctx, ideal(R, g)); }
};

// smooth quadric in P^4 and the quadric cone over a smooth quadric surface
struct P4 {
  RingPtr R = PolynomialRing::create(32003, 5);
  Ring smooth{R, poly(R, "x0*x1 + x2*x3 + x4^2")};
  Ring cone{R, poly(R, "x0*x3 - x1*x2")};
};

}  // namespace

TEST_CASE("predicates on the twisted cubic, a complete intersection and skew lines", "[liaison]") {
  P3 p;
  Subscheme cubic = p.sub({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  CHECK(is_acm(cubic));
  CHECK_FALSE(is_ag(cubic));
  CHECK_FALSE(is_ci(cubic));
  CHECK(cubic.degree() == 3);
  CHECK(cubic.dimension() == 1);
  CHECK(cubic.dimension() + cubic.codimension() == 3);

  Subscheme ci = p.sub({"x0^2 + x1*x2", "x3^2 - x0*x1"});
  CHECK(is_acm(ci));
  CHECK(is_ag(ci));
  CHECK(is_ci(ci));

  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  CHECK_FALSE(is_acm(skew));
  CHECK(is_unmixed(skew));
  CHECK(skew.degree() == 2);

  // a line with an embedded point is mixed
  Subscheme mixed = Subscheme::from_generators(p.ctx, polys(p.R, {"x0^2", "x0*x1", "x0*x2"}));
  CHECK_FALSE(is_unmixed(mixed));
}

TEST_CASE("unsaturated ideals are rejected", "[liaison]") {
  P3 p;
  CHECK_THROWS_AS(p.sub({"x0^2", "x0*x1", "x0*x2", "x0*x3"}), UsageError);
}

TEST_CASE("twisted cubic linked by two quadrics gives a line", "[liaison]") {
  P3 p;
  Subscheme cubic = p.sub({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  Subscheme y = complete_intersection(p.ctx, polys(p.R, {"x0*x2 - x1^2", "x1*x3 - x2^2"}));
  LinkResult r = link(cubic, y);
  INFO(r.certificate.failure);
  CHECK(r.certificate.valid);
  CHECK(r.certificate.kind == LinkKind::CompleteIntersection);
  CHECK(r.residual.ideal() == ideal(p.R, {"x1", "x2"}));
  CHECK(cubic.degree() + r.residual.degree() == 4);
  CHECK(r.certificate.intersection_equal);
}

TEST_CASE("skew lines linked by monomial quadrics", "[liaison]") {
  P3 p;
  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  Subscheme y = complete_intersection(p.ctx, polys(p.R, {"x0*x2", "x1*x3"}));
  LinkResult r = link(skew, y);
  INFO(r.certificate.failure);
  CHECK(r.certificate.valid);
  CHECK(r.residual.ideal() == intersect(ideal(p.R, {"x0", "x3"}), ideal(p.R, {"x1", "x2"})));
  CHECK(r.residual.degree() == 2);
  RaoModule m = rao_module(skew), m2 = rao_module(r.residual);
  CHECK(m.hilbert == HilbertTable{{0, 1}});
  CHECK(table_reversed_translate(m.hilbert, m2.hilbert).has_value());
}

TEST_CASE("a non-Gorenstein linking scheme invalidates the certificate", "[liaison]") {
  P3 p;
  Subscheme line = p.sub({"x0", "x1"});
  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  LinkResult r = link(line, skew);
  CHECK_FALSE(r.certificate.valid);
  CHECK(r.certificate.containment);
  CHECK(r.certificate.failure == "Y is not arithmetically Gorenstein");
}

TEST_CASE("random complete intersection links in P3", "[liaison]") {
  P3 p;
  Subscheme cubic = p.sub({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  CiLink l = ci_link_in_context(cubic, 2, 2, 7);
  CHECK(l.certificate.valid);
  CHECK(l.residual.degree() == 1);
  CHECK(is_acm(l.residual));
  CHECK_THROWS_AS(ci_link_in_context(cubic, 1, 2, 7), GenericityError);
}

TEST_CASE("line on the smooth quadric linked by a conic", "[liaison]") {
  P4 q;
  Subscheme line(q.smooth, ideal(q.R, {"x0", "x2", "x4", "x0*x1 + x2*x3 + x4^2"}));
  CHECK(line.codimension_in_context() == 2);
  CiLink l = ci_link_in_context(line, 1, 1, 3);
  INFO(l.certificate.failure);
  CHECK(l.certificate.valid);
  CHECK(l.certificate.in_hypersurface);
  CHECK(l.y.degree() == 2);
  CHECK(l.residual.degree() == 1);
  CHECK(l.residual.dimension() == 1);
}

TEST_CASE("rao module of disjoint conics in planes meeting in a point", "[liaison]") {
  P4 q;
  // conics in the planes (x0, x1) and (x2, x3), meeting at (0:0:0:0:1)
  GradedIdeal a = ideal(q.R, {"x0", "x1", "x2*x3 - x4^2"});
  GradedIdeal b = ideal(q.R, {"x2", "x3", "x0*x1 - x4^2"});
  Subscheme c(Ring(q.R), intersect(a, b));
  RaoModule m = rao_module(c);
  CHECK(m.hilbert == HilbertTable{{0, 1}, {1, 1}});
  CHECK(annihilator(m.module) == ideal(q.R, {"x0", "x1", "x2", "x3", "x4^2"}));
}

TEST_CASE("rao shift equivalence of point modules", "[liaison]") {
  auto R = PolynomialRing::create(32003, 4);
  GradedIdeal max = ideal(R, {"x0", "x1", "x2", "x3"});
  RaoModule k0 = rao_record(ModulePresentation::cyclic_quotient(Ring(R), max));
  RaoModule k3 = rao_record(ModulePresentation::cyclic_quotient(Ring(R), max).twisted(-3));
  CHECK(rao_shift_equivalent(k0, k0) == 0);
  CHECK(rao_shift_equivalent(k0, k3) == 3);
  RaoModule two = rao_record(ModulePresentation::cyclic_quotient(Ring(R), ideal(R, {"x0", "x1", "x2", "x3^2"})));
  CHECK_FALSE(rao_shift_equivalent(k0, two).has_value());
}

TEST_CASE("elementary biliaison on a smooth quadric surface", "[liaison]") {
  P3 p;
  Subscheme s = p.sub({"x0*x3 - x1*x2"});
  Subscheme line = p.sub({"x0", "x1"});
  Biliaison b = elementary_biliaison(line, s, 1, 11);
  CHECK(b.first.valid);
  CHECK(b.second.valid);
  CHECK(b.residual.degree() == 3);
  CHECK(is_acm(b.residual));

  Biliaison flat = elementary_biliaison(line, s, 0, 11);
  CHECK(flat.residual.degree() == 1);

  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  Biliaison sb = elementary_biliaison(skew, p.sub({"x0*x3 - x1*x2"}), 1, 5);
  CHECK(sb.residual.degree() == 4);
  CHECK(rao_shift_equivalent(rao_module(skew), rao_module(sb.residual)).has_value());
}

TEST_CASE("n-type resolution of skew lines", "[liaison][ntype]") {
  P3 p;
  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  RaoModule m = rao_module(skew);
  NTypeResolution nt = n_type_resolution(skew);
  NTypeCheck chk = verify_ntype(nt, skew, m);
  INFO(chk.failure);
  CHECK(chk.valid);
  CHECK(chk.h1 == HilbertTable{{0, 1}});
}

TEST_CASE("syzygy dual reverses the H1 table", "[liaison][ntype]") {
  P3 p;
  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  ModulePresentation N = skew.ideal_module();
  ModulePresentation d = syzygy_dual(N);
  CohomologyModule h = sheaf_cohomology(d, 1);
  REQUIRE(h.finite_length);
  CHECK(table_reversed_translate(HilbertTable{{0, 1}}, h.hilbert_function).has_value());
  CHECK(syzygy_dual(ModulePresentation::free(p.ctx, {0, 1})).is_zero());
}

TEST_CASE("link transform of the skew lines n-type", "[liaison][ntype]") {
  P3 p;
  Subscheme skew = p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  Subscheme y = complete_intersection(p.ctx, polys(p.R, {"x0*x2", "x1*x3"}));
  LinkResult r = link(skew, y);
  NTypeResolution nt = n_type_resolution(skew);
  NTypeResolution np = link_transform_ntype(nt, skew, y);
  NTypeCheck chk = verify_ntype(np, r.residual, rao_module(r.residual));
  INFO(chk.failure);
  CHECK(chk.valid);
}

TEST_CASE("curve from the point module in P3", "[liaison][ntype]") {
  P3 p;
  ModulePresentation k = ModulePresentation::cyclic_quotient(p.ctx, ideal(p.R, {"x0", "x1", "x2", "x3"}));
  CurveFromRao c = curve_from_rao_module(k, p.ctx, 1);
  INFO(c.curve.describe());
  CHECK(c.curve.dimension() == 1);
  CHECK(rao_shift_equivalent(rao_record(k), rao_module(c.curve)).has_value());
}

TEST_CASE("n-type resolution of skew lines on the quadric cone", "[liaison][ntype][cone]") {
  P4 q;
  Subscheme skew = Subscheme::from_generators(
      q.cone, polys(q.R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3", "x4"}));
  CHECK(skew.dimension() == 1);
  RaoModule m = rao_module(skew);
  CHECK(m.hilbert == HilbertTable{{0, 1}});
  NTypeResolution nt = n_type_resolution(skew);
  NTypeCheck chk = verify_ntype(nt, skew, m);
  INFO(chk.failure);
  CHECK(chk.valid);

  CiLink l = ci_link_in_context(skew, 2, 2, 9);
  REQUIRE(l.certificate.valid);
  NTypeResolution np = link_transform_ntype(nt, skew, l.y);
  RaoModule m2 = rao_module(l.residual);
  NTypeCheck chk2 = verify_ntype(np, l.residual, m2);
  INFO(chk2.failure);
  CHECK(chk2.valid);
  CHECK(table_reversed_translate(m.hilbert, chk2.h1).has_value());
}

TEST_CASE("curves on the cone from finite length modules", "[liaison][ntype][cone]") {
  P4 q;
  ModulePresentation k = ModulePresentation::cyclic_quotient(q.cone, ideal(q.R, {"x0", "x1", "x2", "x3", "x4"}));
  CurveFromRao c = curve_from_rao_module(k, q.cone, 2);
  INFO(c.curve.describe());
  CHECK(c.curve.codimension_in_context() == 2);
  CHECK(rao_shift_equivalent(rao_record(k), rao_module(c.curve)).has_value());

  ModulePresentation les =
      ModulePresentation::cyclic_quotient(q.cone, ideal(q.R, {"x0", "x1", "x2", "x3", "x4^2"}));
  CurveFromRao c2 = curve_from_rao_module(les, q.cone, 3);
  INFO(c2.curve.describe());
  CHECK(rao_shift_equivalent(rao_record(les), rao_module(c2.curve)).has_value());

  CurveFromRao acm = curve_from_rao_module(ModulePresentation::free(q.cone, {}), q.cone, 4);
  CHECK(is_acm(acm.curve));
}

TEST_CASE("a line and a rational quartic linked by an elliptic quintic", "[liaison][serre]") {
  auto R = PolynomialRing::create(32003, 5);
  Ring X(R, poly(R, "x0*x4 + x1*x3 - 2*x2^2"));
  Subscheme line(X, ideal(R, {"x0", "x1", "x2"}));
  SerreSheaf e = serre_sheaf_from_ag(line);
  SerreSection y = serre_subscheme_through(e.extension.module, e.a + 1, line.ideal(), 1);
  const Subscheme& quintic = y.subscheme;
  CHECK(quintic.degree() == 5);
  CHECK(is_ag(quintic));
  CHECK(quintic.betti().totals() == std::vector<int>{1, 5, 5, 1});
  CHECK(quintic.betti().is_symmetric());

  LinkResult r = link(line, quintic);
  REQUIRE(r.certificate.valid);
  const Subscheme& quartic = r.residual;
  CHECK(quartic.degree() == 4);
  CHECK(quartic.ideal().degree_part(1).empty());
  CHECK(quartic.betti().totals() == std::vector<int>{1, 6, 8, 3});
  CHECK(is_acm(quartic));
  // the line is a secant: it meets the quartic in a scheme of length 2
  Subscheme meet(Ring(R), saturate(line.ideal() + quartic.ideal()));
  CHECK(meet.dimension() == 0);
  CHECK(meet.degree() == 2);

  LinkResult back = link(quartic, quintic);
  CHECK(back.certificate.valid);
  CHECK(back.residual.ideal() == line.ideal());
}

TEST_CASE("liaison invariants over random links", "[liaison][property]") {
  P3 p;
  std::vector<Subscheme> corpus{
      p.sub({"x0*x2", "x0*x3", "x1*x2", "x1*x3"}),
      p.sub({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}),
      Subscheme(p.ctx, intersect(intersect(ideal(p.R, {"x0", "x1"}), ideal(p.R, {"x2", "x3"})),
                                 ideal(p.R, {"x0 - x2", "x1 - x3"}))),
      p.sub({"x0", "x1"}),
  };
  const std::vector<std::pair<int, int>> degrees{{2, 2}, {2, 3}, {3, 3}};
  int links = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    for (auto [da, db] : degrees) {
      for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        const Subscheme& C = corpus[c];
        std::optional<CiLink> found;
        try {
          found = ci_link_in_context(C, da, db, seed + 100 * c);
        } catch (const GenericityError&) {
          continue;  // no two forms of these degrees cut a curve
        }
        const CiLink& l = *found;
        INFO("curve " << c << " degrees " << da << "," << db << " seed " << seed);
        REQUIRE(l.certificate.valid);
        ++links;
        // involution and degree additivity
        CHECK(quotient(l.y.ideal(), l.residual.ideal()) == C.ideal());
        CHECK(C.degree() + l.residual.degree() == l.y.degree());
        // CI => AG => ACM, and AG iff symmetric Betti table
        CHECK(is_ag(l.y));
        CHECK(l.y.betti().is_symmetric());
        CHECK(is_acm(l.y));
        CHECK(rao_module(l.y).is_zero());
        // one link reverses the Rao function, two links translate it
        RaoModule m = rao_module(C), m1 = rao_module(l.residual);
        CHECK(table_reversed_translate(m.hilbert, m1.hilbert).has_value());
        CHECK(is_acm(C) == is_acm(l.residual));
        if (l.residual.degree() <= 6) {
          CiLink l2 = ci_link_in_context(l.residual, da, db, seed + 7);
          REQUIRE(l2.certificate.valid);
          CHECK(table_translate(m.hilbert, rao_module(l2.residual).hilbert).has_value());
        }
      }
    }
  }
  CHECK(links >= 12);
}

TEST_CASE("is_ag agrees with Betti symmetry", "[liaison][property]") {
  P3 p;
  SeedStream rng(31);
  for (int round = 0; round < 20; ++round) {
    std::vector<Polynomial> forms;
    for (int k = 0; k < 2; ++k) forms.push_back(sparse_random(p.R, 1 + static_cast<int>(rng.next() % 3), 3, rng));
    GradedIdeal I(p.R, forms);
    if (I.krull_dimension() != 2) continue;
    Subscheme s = Subscheme::from_generators(p.ctx, forms);
    INFO(s.describe());
    CHECK(is_ag(s) == s.betti().is_symmetric());
    if (is_ci(s)) CHECK(is_ag(s));
    if (is_ag(s)) CHECK(is_acm(s));
  }
}
