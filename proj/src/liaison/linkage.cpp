#include "gliaison/liaison/linkage.hpp"

#include "gliaison/errors.hpp"
#include "gliaison/kernel/random.hpp"

namespace gliaison {

std::string LinkageCertificate::kind_name() const {
  std::string k = kind == LinkKind::CompleteIntersection ? "CI-link" : "G-link";
  return in_hypersurface ? k + " in X" : k;
}

LinkResult link(const Subscheme& C, const Subscheme& Y) {
  LinkageCertificate cert{C.ideal(), Y.ideal(), C.ideal()};
  cert.in_hypersurface = C.context().has_modulus();
  auto fail = [&](const std::string& why) {
    if (cert.failure.empty()) cert.failure = why;
  };
  if (C.context() != Y.context()) throw UsageError("C and Y live in different contexts");
  cert.containment = C.ideal().contains(Y.ideal());
  if (!cert.containment) fail("I_Y is not contained in I_C");
  cert.codimensions_agree = C.codimension() == Y.codimension();
  if (!cert.codimensions_agree) fail("codim Y != codim C");
  cert.y_symmetric_betti = Y.betti().is_symmetric();
  cert.y_last_betti_one = is_ag(Y);
  if (!cert.y_last_betti_one) fail("Y is not arithmetically Gorenstein");
  cert.kind = (is_ci(Y) || is_ci_in_context(Y)) ? LinkKind::CompleteIntersection : LinkKind::Gorenstein;
  cert.c_unmixed = is_unmixed(C);
  if (!cert.c_unmixed) fail("C is not unmixed");

  GradedIdeal q = quotient(Y.ideal(), C.ideal());
  GradedIdeal sat = saturate(q);
  cert.quotient_saturated = sat == q;
  cert.residual = sat;
  Subscheme residual(C.context(), sat);
  cert.bidual = quotient(Y.ideal(), sat) == C.ideal();
  if (!cert.bidual) fail("I_Y : (I_Y : I_C) != I_C");
  cert.intersection_equal = intersect(C.ideal(), sat) == Y.ideal();
  cert.degree_additive = C.degree() + residual.degree() == Y.degree();
  if (!cert.degree_additive) fail("deg C + deg C' != deg Y");
  cert.valid = cert.failure.empty();
  return LinkResult{residual, cert};
}

Subscheme complete_intersection(const Ring& context, const std::vector<Polynomial>& forms) {
  auto gens = forms;
  if (context.has_modulus()) gens.push_back(context.modulus());
  return Subscheme(context, GradedIdeal(context.ambient(), gens));
}

namespace {

// Random element of I_d that is not in J (for instance not a multiple of the modulus).
std::optional<Polynomial> random_form_outside(const GradedIdeal& I, const GradedIdeal& J, int d, SeedStream& rng) {
  if (I.degree_part(d).empty()) return std::nullopt;
  for (int k = 0; k < 8; ++k) {
    Polynomial p = I.random_element(d, rng);
    if (!p.is_zero() && !J.contains(p)) return p;
  }
  return std::nullopt;
}

GradedIdeal context_ideal(const Ring& context) {
  if (!context.has_modulus()) return GradedIdeal::zero(context.ambient());
  return GradedIdeal(context.ambient(), {context.modulus()});
}

}  // namespace

CiLink ci_link_in_context(const Subscheme& C, int a, int b, std::uint64_t seed, int retries) {
  SeedStream rng(seed);
  const Ring& X = C.context();
  GradedIdeal base = context_ideal(X);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    auto fa = random_form_outside(C.ideal(), base, a, rng);
    if (!fa) break;
    auto fb = random_form_outside(C.ideal(), base + GradedIdeal(X.ambient(), {*fa}), b, rng);
    if (!fb) break;
    GradedIdeal Iy(X.ambient(), {*fa, *fb});
    if (X.has_modulus()) Iy = Iy + base;
    if (Iy.codimension() != C.codimension()) continue;
    Subscheme Y(X, Iy);
    LinkResult r = link(C, Y);
    if (!r.certificate.valid) continue;
    return CiLink{Y, r.residual, r.certificate, attempt};
  }
  throw GenericityError("no complete intersection of degrees (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") through C gave a valid link in " + std::to_string(retries) + " attempts");
}

Biliaison elementary_biliaison(const Subscheme& C, const Subscheme& S, int m, std::uint64_t seed, int retries) {
  if (m < 0) throw UsageError("biliaison height must be nonnegative");
  if (!C.ideal().contains(S.ideal())) throw UsageError("the surface does not contain C");
  if (S.codimension() + 1 != C.codimension()) throw UsageError("S must have dimension one more than C");
  if (!is_ag(S)) throw UsageError("elementary_biliaison links on an arithmetically Gorenstein surface");
  SeedStream rng(seed);
  const Ring& X = C.context();
  // least degree with forms through C that do not vanish on S
  int d = 1;
  while (d < 64 && C.ideal().degree_part(d).size() == S.ideal().degree_part(d).size()) ++d;
  for (int attempt = 1; attempt <= retries; ++attempt) {
    auto f1 = random_form_outside(C.ideal(), S.ideal(), d, rng);
    if (!f1) throw GenericityError("no form of degree " + std::to_string(d) + " through C off S");
    Subscheme Y1 = Subscheme::from_generators(X, (S.ideal() + GradedIdeal(X.ambient(), {*f1})).generators());
    if (Y1.codimension() != C.codimension()) continue;
    LinkResult l1 = link(C, Y1);
    if (!l1.certificate.valid) continue;
    auto f2 = random_form_outside(l1.residual.ideal(), S.ideal(), d + m, rng);
    if (!f2) continue;
    Subscheme Y2 = Subscheme::from_generators(X, (S.ideal() + GradedIdeal(X.ambient(), {*f2})).generators());
    if (Y2.codimension() != C.codimension()) continue;
    LinkResult l2 = link(l1.residual, Y2);
    if (!l2.certificate.valid) continue;
    return Biliaison{l1.residual, l2.residual, l1.certificate, l2.certificate, d};
  }
  throw GenericityError("elementary biliaison of height " + std::to_string(m) + " failed in " +
                        std::to_string(retries) + " attempts");
}

}  // namespace gliaison
