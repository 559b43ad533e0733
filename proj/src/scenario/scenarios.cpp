#include "gliaison/scenario/scenarios.hpp"

#include <functional>

#include "gliaison/errors.hpp"
#include "gliaison/homology/ext.hpp"
#include "gliaison/kernel/parse.hpp"
#include "gliaison/liaison/ntype.hpp"
#include "gliaison/mcm/acm.hpp"
#include "gliaison/mcm/extension.hpp"
#include "gliaison/mcm/factorization.hpp"
#include "gliaison/mcm/serre.hpp"

namespace gliaison {

namespace {

using Runner = std::function<void(ScenarioReport&, const ScenarioOptions&)>;

struct Entry {
  ScenarioInfo info;
  Runner run;
};

std::string table_string(const HilbertTable& h) { return hilbert_json(h).dump(); }

BettiTable betti_of(std::map<std::pair<int, int>, int> e) { return BettiTable(std::move(e)); }

HilbertTable hilbert_window(const HilbertSeries& hs, int lo, int hi) {
  HilbertTable out;
  for (int n = lo; n <= hi; ++n)
    if (long long v = hs.value(n)) out[n] = v;
  return out;
}

bool additive_on_window(const HilbertSeries& mid, const HilbertSeries& a, const HilbertSeries& b, int w) {
  for (int n = -w; n <= w; ++n)
    if (mid.value(n) != a.value(n) + b.value(n)) return false;
  return true;
}

struct Data {
  const ScenarioOptions& opts;
  ScenarioReport& report;
  bool overridden = false;

  std::vector<Polynomial> ideal(const RingPtr& R, const std::string& name, const std::vector<std::string>& builtin) {
    if (opts.input) {
      auto it = opts.input->ideals.find(name);
      if (it != opts.input->ideals.end()) {
        if (opts.input->ring->nvars() != R->nvars() || opts.input->ring->field().characteristic() !=
                                                             R->field().characteristic())
          throw UsageError("input ring does not match the ring of this scenario");
        overridden = true;
        report.notes.push_back("ideal " + name + " taken from the input document");
        std::vector<Polynomial> out;
        for (auto& p : it->second) out.push_back(parse_polynomial(R, p.to_string()));
        return out;
      }
    }
    std::vector<Polynomial> out;
    for (auto& s : builtin) out.push_back(parse_polynomial(R, s));
    return out;
  }
  // Golden values only apply to the built-in data.
  bool golden() const { return !overridden; }
};

void record_subscheme(ScenarioReport& r, Step& st, const std::string& name, const Subscheme& s) {
  st.outputs[name] = {{"ideal", s.ideal().to_string()},
                      {"dimension", s.dimension()},
                      {"degree", s.degree()},
                      {"acm", is_acm(s)},
                      {"ag", is_ag(s)},
                      {"ci", is_ci(s) || is_ci_in_context(s)}};
  r.add_betti(name, s.betti());
}

void record_link(ScenarioReport& r, Step& st, const std::string& name, const LinkageCertificate& c) {
  st.check("certificate " + name + " valid", c.valid, c.failure);
  st.check("linkage involution", c.bidual);
  st.check("degree additivity", c.degree_additive);
  r.add_certificate(name, c);
}

bool euler_identity(const FreeResolution& res, const HilbertSeries& hs) {
  return HilbertSeries(res.euler_numerator(), res.ring.nvars()) == hs;
}

// ---- skew-lines ---------------------------------------------------------

void skew_lines(ScenarioReport& r, const ScenarioOptions& o) {
  Data data{o, r};
  auto R = PolynomialRing::create(32003, 4);
  Ring P(R);
  Subscheme C = Subscheme::from_generators(P, data.ideal(R, "C", {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
  {
    Step& st = r.step("resolve");
    record_subscheme(r, st, "C", C);
    st.check("resolution is a complex", C.resolution().is_complex());
    st.check("Euler characteristic equals the Hilbert numerator",
             euler_identity(C.resolution(), C.ideal().hilbert_series()));
    if (data.golden())
      st.check("Betti table (1; 4 quadrics; 4 cubics; 1 quartic)",
               C.betti() == betti_of({{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}}), C.betti().to_string());
    st.check("not ACM", !is_acm(C));
    st.check("unmixed", is_unmixed(C));
  }
  RaoModule m = rao_module(C);
  {
    Step& st = r.step("rao_module");
    r.add_hilbert("rao C", m.hilbert);
    st.outputs["hilbert"] = hilbert_json(m.hilbert);
    if (data.golden()) {
      st.check("Rao function {0: 1}", m.hilbert == HilbertTable{{0, 1}}, table_string(m.hilbert));
      // h^1(I_C(n)) = h^0(O_C(n)) - h_{S/I}(n) for two disjoint lines
      HilbertTable oracle;
      HilbertSeries hs = C.ideal().hilbert_series();
      for (int n = -o.max_degree; n <= o.max_degree; ++n) {
        long long h = (n >= 0 ? 2LL * (n + 1) : 0) - hs.value(n);
        if (h) oracle[n] = h;
      }
      st.check("inclusion-exclusion oracle agrees", oracle == m.hilbert, table_string(oracle));
    }
  }
  // a user-supplied C without a matching Y gets a random (2,2) link
  const bool own_y = !data.overridden || (o.input && o.input->ideals.count("Y"));
  LinkResult first = own_y ? link(C, complete_intersection(P, data.ideal(R, "Y", {"x0*x2", "x1*x3"})))
                           : [&] {
                               CiLink l = ci_link_in_context(C, 2, 2, o.seed, o.retries);
                               return LinkResult{l.residual, l.certificate};
                             }();
  {
    Step& st = r.step("link by a complete intersection");
    record_subscheme(r, st, "C'", first.residual);
    record_link(r, st, "C -> C'", first.certificate);
    if (data.golden()) {
      GradedIdeal expected = intersect(GradedIdeal(R, {R->variable(0), R->variable(3)}),
                                       GradedIdeal(R, {R->variable(1), R->variable(2)}));
      st.check("residual is V(x0, x3) + V(x1, x2)", first.residual.ideal() == expected);
    }
    RaoModule m1 = rao_module(first.residual);
    r.add_hilbert("rao C'", m1.hilbert);
    auto h = table_reversed_translate(m.hilbert, m1.hilbert);
    st.check("Rao function of C' is a reversed translate", h.has_value());
    if (h) st.outputs["reversal shift"] = *h;
  }
  {
    Step& st = r.step("second link");
    CiLink second = ci_link_in_context(first.residual, 2, 2, o.seed, o.retries);
    record_link(r, st, "C' -> C''", second.certificate);
    RaoModule m2 = rao_module(second.residual);
    r.add_hilbert("rao C''", m2.hilbert);
    auto h = rao_shift_equivalent(m, m2);
    st.check("Rao module of C'' is a translate of that of C", h.has_value());
    if (h) st.outputs["shift"] = *h;
  }
}

// ---- twisted-cubic-link -------------------------------------------------

void twisted_cubic_link(ScenarioReport& r, const ScenarioOptions& o) {
  Data data{o, r};
  auto R = PolynomialRing::create(32003, 4);
  Ring P(R);
  Subscheme C =
      Subscheme::from_generators(P, data.ideal(R, "C", {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}));
  {
    Step& st = r.step("predicates");
    record_subscheme(r, st, "C", C);
    st.check("ACM", is_acm(C));
    st.check("not AG", !is_ag(C));
    st.check("not CI", !is_ci(C));
    RaoModule m = rao_module(C);
    st.check("Rao module is zero", m.is_zero());
    if (data.golden())
      st.check("Betti table (1; 3 in degree 2; 2 in degree 3)",
               C.betti() == betti_of({{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}), C.betti().to_string());
  }
  Subscheme Y = complete_intersection(P, data.ideal(R, "Y", {"x0*x2 - x1^2", "x1*x3 - x2^2"}));
  LinkResult l = link(C, Y);
  Step& st = r.step("link by two quadrics");
  record_subscheme(r, st, "C'", l.residual);
  record_link(r, st, "C -> C'", l.certificate);
  st.check("CI link", l.certificate.kind == LinkKind::CompleteIntersection);
  if (data.golden()) {
    st.check("residual is the line (x1, x2)",
             l.residual.ideal() == GradedIdeal(R, {R->variable(1), R->variable(2)}));
    st.check("3 + 1 = 4", C.degree() == 3 && l.residual.degree() == 1 && Y.degree() == 4);
  }
}

// ---- quadric-quintic ------------------------------------------------------

void quadric_quintic(ScenarioReport& r, const ScenarioOptions& o) {
  auto R = PolynomialRing::create(32003, 5);
  Ring X(R, parse_polynomial(R, "x0*x4 + x1*x3 - 2*x2^2"));
  Subscheme line(X, GradedIdeal(R, {R->variable(0), R->variable(1), R->variable(2), X.modulus()}));
  r.notes.push_back("the quintic is found as the zero locus of a random section through the line; the line is "
                    "then a secant of the residual quartic");
  SerreSheaf e = serre_sheaf_from_ag(line);
  {
    Step& st = r.step("rank 2 sheaf of the line");
    st.outputs["a"] = e.a;
    st.check("ACM of rank 2", e.acm && e.acm->acm && e.acm->rank == 2);
  }
  SerreSection sec = serre_subscheme_through(e.extension.module, e.a + 1, line.ideal(), o.seed, o.retries);
  const Subscheme& Y = sec.subscheme;
  {
    Step& st = r.step("elliptic quintic through the line");
    record_subscheme(r, st, "Y", Y);
    st.outputs["attempts"] = sec.attempts;
    st.check("degree 5", Y.degree() == 5);
    st.check("arithmetically Gorenstein", is_ag(Y));
    st.check("Betti totals (1, 5, 5, 1)", Y.betti().totals() == std::vector<int>{1, 5, 5, 1},
             Y.betti().to_string());
    st.check("symmetric Betti table", Y.betti().is_symmetric());
  }
  LinkResult to_quartic = link(line, Y);
  const Subscheme& Q = to_quartic.residual;
  {
    Step& st = r.step("link the line to a quartic");
    record_subscheme(r, st, "quartic", Q);
    record_link(r, st, "line -> quartic", to_quartic.certificate);
    st.check("degree 4, spanning P4", Q.degree() == 4 && Q.ideal().degree_part(1).empty());
    st.check("rational normal quartic Betti totals (1, 6, 8, 3)",
             Q.betti().totals() == std::vector<int>{1, 6, 8, 3});
    Subscheme meet(Ring(R), saturate(line.ideal() + Q.ideal()));
    st.check("the line is a secant", meet.dimension() == 0 && meet.degree() == 2,
             "intersection length " + std::to_string(meet.degree()));
    st.check("Y = quartic + line", intersect(Q.ideal(), line.ideal()) == Y.ideal());
  }
  {
    Step& st = r.step("link the quartic back");
    LinkResult back = link(Q, Y);
    record_link(r, st, "quartic -> line", back.certificate);
    st.check("residual is the line", back.residual.ideal() == line.ideal());
  }
}

// ---- line-conic-line ------------------------------------------------------

void line_conic_line(ScenarioReport& r, const ScenarioOptions& o) {
  auto R = PolynomialRing::create(32003, 5);
  Ring X(R, parse_polynomial(R, "x0*x4 + x1*x3 - 2*x2^2"));
  Subscheme line(X, GradedIdeal(R, {R->variable(0), R->variable(1), R->variable(2), X.modulus()}));
  CiLink l = ci_link_in_context(line, 1, 1, o.seed, o.retries);
  Step& st = r.step("link a line by a conic");
  record_subscheme(r, st, "L", line);
  record_subscheme(r, st, "Y", l.y);
  record_subscheme(r, st, "L'", l.residual);
  record_link(r, st, "L -> L'", l.certificate);
  st.check("Y is a conic", l.y.degree() == 2 && l.y.dimension() == 1);
  st.check("1 + 1 = 2", l.residual.degree() == 1 && l.residual.dimension() == 1);
  st.check("a different line", !(l.residual.ideal() == line.ideal()));
}

// ---- lesperance -----------------------------------------------------------

void lesperance(ScenarioReport& r, const ScenarioOptions& o) {
  Data data{o, r};
  auto R = PolynomialRing::create(32003, 5);
  Ring P(R);
  GradedIdeal c1(R, data.ideal(R, "C1", {"x0", "x1", "x2*x3 - x4^2"}));
  GradedIdeal c2(R, data.ideal(R, "C2", {"x2", "x3", "x0*x1 - x4^2"}));
  Subscheme C(P, intersect(c1, c2));
  Step& st = r.step("rao module of two conics");
  record_subscheme(r, st, "C", C);
  RaoModule m = rao_module(C);
  r.add_hilbert("rao C", m.hilbert);
  st.outputs["hilbert"] = hilbert_json(m.hilbert);
  if (data.golden()) {
    st.check("Rao function {0: 1, 1: 1}", m.hilbert == (HilbertTable{{0, 1}, {1, 1}}), table_string(m.hilbert));
    GradedIdeal point(R, {R->variable(0), R->variable(1), R->variable(2), R->variable(3), R->variable(4).pow(2)});
    st.check("annihilator is I_P + R_{>=2}", annihilator(m.module) == point);
  }
  r.add_betti("rao C", m.betti);
}

// ---- cone-planes ------------------------------------------------------------

void cone_planes(ScenarioReport& r, const ScenarioOptions& o) {
  auto R = PolynomialRing::create(32003, 5);
  Ring X(R, parse_polynomial(R, "x0*x3 - x1*x2"));
  auto plane = [&](std::size_t i, std::size_t j) {
    return GradedIdeal(R, {R->variable(i), R->variable(j), X.modulus()});
  };
  ModulePresentation ID = ModulePresentation::ideal_module(X, plane(0, 1));
  ModulePresentation IE = ModulePresentation::ideal_module(X, plane(0, 2));
  for (auto [name, M] : {std::pair{"I_D", ID}, std::pair{"I_E", IE}}) {
    Step& st = r.step(std::string("acm_module_check ") + name);
    AcmCheck c = acm_module_check(M);
    st.check("projective dimension 1 over P", c.acm);
    st.check("rank 1", c.rank == 1);
    st.check("matrix factorization valid", c.report && c.report->valid);
    st.check("H^1 and H^2 vanish", c.cohomology_vanishes());
    r.add_betti(name, c.ambient_betti);
  }
  ModulePresentation B = IE.twisted(1);
  Ext1 e = ext1(B, ID);
  ExtensionClass cls = extension_class(e, canonical_generator(e));
  Extension E = extension_module(cls);
  {
    Step& st = r.step("extension of I_E(1) by I_D");
    st.outputs["ext1 generators"] = e.module.num_generators();
    st.outputs["class degree"] = cls.degree;
    st.check("class of degree 0", cls.degree == 0);
    st.check("not split", !E.split);
    AcmCheck c = acm_module_check(E.module);
    AcmCheck free2 = acm_module_check(ModulePresentation::free(X, {0, 0}));
    r.add_betti("E", c.ambient_betti);
    st.check("Betti table of O_X^2", c.ambient_betti == free2.ambient_betti, c.ambient_betti.to_string());
    st.check("0 -> I_D -> E -> I_E(1) -> 0 is Hilbert-exact on the window",
             additive_on_window(E.module.hilbert_series(), ID.hilbert_series(), B.hilbert_series(), o.max_degree));
  }
  {
    Step& st = r.step("rank one sheaves as surfaces");
    SurfaceFromSheaf d = rank1_acm_to_surface(ID, -2, 2, o.seed);
    SurfaceFromSheaf s = rank1_acm_to_surface(B, -2, 2, o.seed);
    st.outputs["I_D"] = {{"a", d.a}, {"surface", d.surface.ideal().to_string()}};
    st.outputs["I_E(1)"] = {{"a", s.a}, {"surface", s.surface.ideal().to_string()}};
    st.check("I_D is the ideal of a plane", d.surface.degree() == 1 && d.surface.ideal().degree_part(1).size() == 2);
    st.check("I_E(1)(-1) is the ideal of a plane",
             s.a == 1 && s.surface.degree() == 1 && s.surface.ideal().degree_part(1).size() == 2);
  }
}

// ---- knoerrer-tower ---------------------------------------------------------

MatrixFactorization base_factorization(const RingPtr& R) {
  Ring P(R);
  Matrix phi(R, 1, 1), psi(R, 1, 1);
  phi.at(0, 0) = R->variable(0);
  psi.at(0, 0) = R->variable(1);
  return MatrixFactorization{R->variable(0) * R->variable(1), GradedMap(P, {0}, {1}, phi),
                             GradedMap(P, {1}, {2}, psi), 0};
}

void record_mf(Step& st, const MatrixFactorization& mf, int rank) {
  MfReport rep = mf_verify(mf);
  for (auto& c : rep.checks) st.check(c.name, c.passed, c.detail);
  st.outputs["f"] = mf.f.to_string();
  st.outputs["size"] = mf.phi.matrix().rows();
  st.outputs["rank"] = rep.rank;
  if (rank > 0) st.check("det phi = f^" + std::to_string(rank), rep.rank == rank);
  MatrixFactorization back = mf_complete(mf.phi, mf.f);
  st.check("mf_complete recovers psi", back.psi.matrix() == mf.psi.matrix());
}

void knoerrer_tower(ScenarioReport& r, const ScenarioOptions&) {
  auto R = PolynomialRing::create(32003, 5);
  MatrixFactorization one = base_factorization(R);
  {
    Step& st = r.step("1x1 factorization of x0*x1");
    MfReport rep = mf_verify(one);
    for (auto& c : rep.checks) st.check(c.name, c.passed, c.detail);
  }
  MatrixFactorization two = knoerrer_xy(one, R->variable(2), R->variable(3));
  {
    Step& st = r.step("2x2 factorization of x0*x1 + x2*x3");
    record_mf(st, two, 1);
  }
  MatrixFactorization four = knoerrer_double_cover(two, R->variable(4));
  {
    Step& st = r.step("4x4 factorization of x0*x1 + x2*x3 + x4^2");
    record_mf(st, four, 2);
    Ring X(R, four.f);
    FreeResolution res = resolve(ModulePresentation(four.phi).over(X), 4);
    BettiTable b = res.betti();
    r.add_betti("coker phi over X", b);
    bool periodic = b.length() >= 3;
    for (int i = 1; i <= b.length(); ++i) periodic = periodic && b.total(i) == 4;
    st.check("two-periodic resolution over X", periodic);
  }
}

// ---- spinor -----------------------------------------------------------------

void spinor(ScenarioReport& r, const ScenarioOptions& o) {
  auto R = PolynomialRing::create(32003, 5);
  MatrixFactorization four =
      knoerrer_double_cover(knoerrer_xy(base_factorization(R), R->variable(2), R->variable(3)), R->variable(4));
  Ring X(R, four.f);
  ModulePresentation S = ModulePresentation(four.phi).over(X);
  AcmCheck c = acm_module_check(S);
  {
    Step& st = r.step("spinor module");
    st.check("ACM", c.acm);
    st.check("rank 2", c.rank == 2);
    st.check("H^1 and H^2 vanish", c.cohomology_vanishes());
    r.add_betti("spinor", c.ambient_betti);
  }
  int a = *std::min_element(S.degrees().begin(), S.degrees().end());
  SerreSection sec = serre_subscheme_from_section(S, a, o.seed, o.retries);
  {
    Step& st = r.step("section of minimal twist");
    record_subscheme(r, st, "Y", sec.subscheme);
    st.outputs["a"] = a;
    st.outputs["b"] = sec.b;
    GradedIdeal line(R, {R->variable(0), R->variable(2), R->variable(4)});
    st.check("AG of codimension 2 in X", is_ag(sec.subscheme) && sec.subscheme.codimension_in_context() == 2);
    st.check("Hilbert function of a line", sec.subscheme.ideal().hilbert_series() == line.hilbert_series());
    st.check("0 -> R -> N(a) -> I_Y(b) -> 0 is Hilbert-exact", sec.exact);
  }
  {
    Step& st = r.step("serre_sheaf_from_ag of the line");
    SerreSheaf back = serre_sheaf_from_ag(sec.subscheme);
    st.outputs["a"] = back.a;
    st.check("ACM of rank 2", back.acm && back.acm->acm && back.acm->rank == 2);
    std::optional<int> shift;
    for (int h = -6; h <= 6 && back.acm && !shift; ++h)
      if (back.acm->ambient_betti.shifted(h) == c.ambient_betti) shift = h;
    st.check("Betti translate of the spinor module", shift.has_value());
    if (shift) st.outputs["shift"] = *shift;
  }
}

// ---- rao-roundtrip ------------------------------------------------------------

void rao_roundtrip(ScenarioReport& r, const ScenarioOptions& o) {
  auto R = PolynomialRing::create(32003, 5);
  Ring X(R, parse_polynomial(R, "x0*x3 - x1*x2"));
  auto module = [&](const std::string& last) {
    std::vector<Polynomial> g{R->variable(0), R->variable(1), R->variable(2), R->variable(3),
                              parse_polynomial(R, last)};
    return ModulePresentation::cyclic_quotient(X, GradedIdeal(R, g));
  };
  for (auto [name, M] : {std::pair{"k", module("x4")}, std::pair{"lesperance", module("x4^2")}}) {
    Step& st = r.step(std::string("curve_from_rao_module ") + name);
    CurveFromRao c = curve_from_rao_module(M, X, o.seed, o.retries);
    RaoModule want = rao_record(M), got = rao_module(c.curve);
    st.outputs["degree"] = c.curve.degree();
    st.outputs["attempts"] = c.attempts;
    st.outputs["rank N'"] = c.rank;
    r.add_hilbert(std::string("M ") + name, want.hilbert);
    r.add_hilbert(std::string("rao of curve for ") + name, got.hilbert);
    st.check("a curve on X", c.curve.dimension() == 1 && c.curve.codimension_in_context() == 2);
    auto h = table_translate(want.hilbert, got.hilbert);
    st.check("Rao function is a translate of M", h.has_value());
    if (h) st.outputs["shift"] = *h;
  }
  // single-link Rao duality and the N-type transform on the cone
  Subscheme C = Subscheme::from_generators(
      X, {R->variable(4), R->variable(0) * R->variable(2), R->variable(0) * R->variable(3),
          R->variable(1) * R->variable(2), R->variable(1) * R->variable(3)});
  RaoModule m = rao_module(C);
  NTypeResolution nt = n_type_resolution(C);
  {
    Step& st = r.step("n-type resolution of two skew lines on the cone");
    NTypeCheck chk = verify_ntype(nt, C, m);
    st.check("N-type contract", chk.valid, chk.failure);
    r.add_hilbert("H^1 N", chk.h1);
  }
  CiLink first = ci_link_in_context(C, 2, 2, o.seed, o.retries);
  {
    Step& st = r.step("random link on the cone");
    record_link(r, st, "C -> C'", first.certificate);
    RaoModule m1 = rao_module(first.residual);
    r.add_hilbert("rao C'", m1.hilbert);
    st.check("Rao function reversed and translated", table_reversed_translate(m.hilbert, m1.hilbert).has_value());
    NTypeResolution np = link_transform_ntype(nt, C, first.y);
    NTypeCheck chk = verify_ntype(np, first.residual, m1);
    st.check("transformed N-type contract", chk.valid, chk.failure);
    CiLink second = ci_link_in_context(first.residual, 2, 3, o.seed + 1, o.retries);
    record_link(r, st, "C' -> C''", second.certificate);
    RaoModule m2 = rao_module(second.residual);
    r.add_hilbert("rao C''", m2.hilbert);
    st.check("after two links a translate of the original", table_translate(m.hilbert, m2.hilbert).has_value());
  }
}

// ---- cubic-surface-points -------------------------------------------------------

void cubic_surface_points(ScenarioReport& r, const ScenarioOptions& o) {
  auto R = PolynomialRing::create(32003, 4);
  Ring X(R, parse_polynomial(R, "x0^3 + x1^3 + x2^3 + x3^3"));
  const PrimeField& F = R->field();
  const Coeff p = F.characteristic();
  SeedStream rng(o.seed);
  // p = 2 mod 3, so cubing is a bijection with inverse a^((2p-1)/3)
  auto random_point = [&]() {
    std::vector<Coeff> a{1, rng.coefficient(F), rng.coefficient(F)};
    Coeff s = F.add(F.add(1, F.mul(a[1], F.mul(a[1], a[1]))), F.mul(a[2], F.mul(a[2], a[2])));
    a.push_back(F.pow(F.neg(s), (2 * p - 1) / 3));
    std::vector<Polynomial> g;
    for (std::size_t i = 1; i < 4; ++i) g.push_back(R->variable(i) - R->variable(0).scaled(a[i]));
    return GradedIdeal(R, g);
  };
  auto points = [&](int n) {
    GradedIdeal I = random_point();
    for (int k = 1; k < n; ++k) I = intersect(I, random_point());
    I = I + GradedIdeal(R, {X.modulus()});
    return Subscheme(X, I);
  };
  r.notes.push_back("experimental: small point sets on the Fermat cubic surface");
  auto chain = [&](Subscheme Z, const std::vector<std::pair<int, int>>& steps) {
    Step& st = r.step("links of " + std::to_string(Z.degree()) + " points");
    std::vector<long long> counts{Z.degree()};
    for (auto [a, b] : steps) {
      CiLink l = ci_link_in_context(Z, a, b, o.seed + counts.size(), o.retries);
      record_link(r, st, std::to_string(Z.degree()) + " points by (" + std::to_string(a) + "," + std::to_string(b) + ")",
                  l.certificate);
      st.check("residual is a set of points", l.residual.dimension() == 0);
      Z = l.residual;
      counts.push_back(Z.degree());
    }
    st.outputs["counts"] = counts;
    return counts;
  };
  auto c5 = chain(points(5), {{2, 2}, {2, 2}});
  r.steps.back().check("5 -> 7 -> 5", c5 == std::vector<long long>{5, 7, 5});
  auto c2 = chain(points(2), {{1, 1}});
  r.steps.back().check("2 -> 1", c2 == std::vector<long long>{2, 1});
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"skew-lines", "Rao module of two skew lines in P3 and its behaviour under links"}, skew_lines},
      {{"twisted-cubic-link", "twisted cubic linked to a line by two quadrics"}, twisted_cubic_link},
      {{"quadric-quintic", "elliptic quintic = rational quartic + secant line on a smooth quadric in P4"},
       quadric_quintic},
      {{"line-conic-line", "a line linked to another line by a conic on a smooth quadric"}, line_conic_line},
      {{"lesperance", "two conics in planes meeting at a point"}, lesperance},
      {{"cone-planes", "the two families of planes on the quadric cone and their extension"}, cone_planes},
      {{"spinor", "spinor module of the smooth quadric in P4 and the Serre correspondence"}, spinor},
      {{"knoerrer-tower", "matrix factorizations x0*x1 -> +x2*x3 -> +x4^2"}, knoerrer_tower},
      {{"rao-roundtrip", "curves on the quadric cone realizing given Rao modules"}, rao_roundtrip},
      {{"cubic-surface-points", "links of small point sets on a cubic surface", true}, cubic_surface_points},
  };
  return entries;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_list() {
  static const std::vector<ScenarioInfo> list = [] {
    std::vector<ScenarioInfo> out;
    for (auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return list;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& options) {
  for (auto& e : registry()) {
    if (e.info.name != name) continue;
    ScenarioReport r;
    r.scenario = name;
    r.seed = options.seed;
    try {
      e.run(r, options);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& ex) {
      r.step("error").check("scenario completed", false, ex.what());
    }
    return r;
  }
  throw UsageError("unknown scenario '" + name + "'");
}

ScenarioReport analyze_document(const InputDocument& doc, const ScenarioOptions& options) {
  ScenarioReport r;
  r.scenario = "analyze";
  r.seed = options.seed;
  const Ring ctx = doc.context();
  for (const std::string& name : doc.order) {
    try {
      if (auto it = doc.ideals.find(name); it != doc.ideals.end()) {
        Step& st = r.step("ideal " + name);
        std::vector<Polynomial> gens = it->second;
        if (ctx.has_modulus()) gens.push_back(ctx.modulus());
        GradedIdeal given(doc.ring, gens);
        Subscheme s = Subscheme::from_generators(ctx, it->second);
        st.outputs["saturated input"] = s.ideal() == given;
        record_subscheme(r, st, name, s);
        st.outputs["unmixed"] = is_unmixed(s);
        r.add_hilbert("S/" + name, hilbert_window(s.ideal().hilbert_series(), 0, options.max_degree));
        st.check("resolution is a complex", s.resolution().is_complex());
        st.check("Euler characteristic equals the Hilbert numerator",
                 euler_identity(s.resolution(), s.ideal().hilbert_series()));
        if (s.dimension() == 1) {
          RaoModule m = rao_module(s);
          r.add_hilbert("rao " + name, m.hilbert);
          st.outputs["rao"] = hilbert_json(m.hilbert);
          st.check("ACM iff the Rao module vanishes", is_acm(s) == m.is_zero());
        }
      } else if (auto mt = doc.matrices.find(name); mt != doc.matrices.end()) {
        Step& st = r.step("matrix " + name);
        const GradedMap& phi = mt->second;
        st.outputs["rows"] = phi.matrix().rows();
        st.outputs["cols"] = phi.matrix().cols();
        if (ctx.has_modulus() && phi.matrix().rows() == phi.matrix().cols()) {
          MatrixFactorization mf = mf_complete(phi, ctx.modulus());
          MfReport rep = mf_verify(mf);
          for (auto& c : rep.checks) st.check(c.name, c.passed, c.detail);
          st.outputs["rank"] = rep.rank;
        }
        r.add_betti("coker " + name, resolve(ModulePresentation(phi).over_ambient()).betti());
      } else if (auto md = doc.modules.find(name); md != doc.modules.end()) {
        Step& st = r.step("module " + name);
        const ModulePresentation& M = md->second;
        HilbertSeries hs = M.hilbert_series();
        st.outputs["dimension"] = hs.krull_dimension();
        r.add_hilbert(name, hilbert_window(hs, -options.max_degree, options.max_degree));
        if (ctx.has_modulus()) {
          AcmCheck c = acm_module_check(M);
          st.outputs["acm"] = c.acm;
          st.outputs["rank"] = c.rank;
          r.add_betti(name + " over P", c.ambient_betti);
          if (c.report)
            for (auto& k : c.report->checks) st.check(k.name, k.passed, k.detail);
          if (c.acm) st.check("MCM module has vanishing H^1 and H^2", c.cohomology_vanishes());
        } else {
          r.add_betti(name, resolve(M).betti());
        }
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& ex) {
      r.step("error in " + name).check("analysis completed", false, ex.what());
    }
  }
  if (r.steps.empty()) r.step("empty document").check("document has at least one block", false);
  return r;
}

}  // namespace gliaison
