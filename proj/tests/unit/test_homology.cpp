#include <catch_amalgamated.hpp>

#include "gliaison/homology/ext.hpp"
#include "support.hpp"

using namespace gliaison;
using namespace testing_support;

namespace {

BettiTable betti_of(std::map<std::pair<int, int>, int> e) { return BettiTable(std::move(e)); }

HilbertSeries series_of(const FreeResolution& res) {
  return HilbertSeries(res.euler_numerator(), res.ring.nvars());
}

}  // namespace

TEST_CASE("koszul complex of three variables", "[homology]") {
  auto R = PolynomialRing::create(32003, 3);
  FreeResolution res = resolve_quotient(Ring(R), ideal(R, {"x0", "x1", "x2"}));
  CHECK(res.complete);
  CHECK(res.betti() == betti_of({{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}}));
  CHECK(res.betti().is_symmetric());
  CHECK(res.is_complex());
}

TEST_CASE("skew lines: betti table and rao module", "[homology]") {
  auto R = PolynomialRing::create(32003, 4);
  GradedIdeal I = ideal(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  FreeResolution res = resolve_quotient(Ring(R), I);
  CHECK(res.betti() == betti_of({{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}}));
  CHECK_FALSE(res.betti().is_symmetric());
  CohomologyModule h1 = ideal_sheaf_cohomology(I, 1);
  REQUIRE(h1.finite_length);
  CHECK(h1.hilbert_function == std::map<int, long long>{{0, 1}});
  // the same module through the ideal sheaf itself
  CohomologyModule again = sheaf_cohomology(ModulePresentation::ideal_module(Ring(R), I), 1);
  REQUIRE(again.finite_length);
  CHECK(again.hilbert_function == h1.hilbert_function);
}

TEST_CASE("twisted cubic is arithmetically Cohen-Macaulay", "[homology]") {
  auto R = PolynomialRing::create(32003, 4);
  GradedIdeal I = ideal(R, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  FreeResolution res = resolve_quotient(Ring(R), I);
  CHECK(res.betti() == betti_of({{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  CohomologyModule h1 = ideal_sheaf_cohomology(I, 1);
  CHECK(h1.finite_length);
  CHECK(h1.hilbert_function.empty());
}

TEST_CASE("resolutions of random ideals are complexes with the right Euler series", "[homology][property]") {
  SeedStream rng(17);
  for (int round = 0; round < 25; ++round) {
    auto R = PolynomialRing::create(32003, 3 + round % 2);
    GradedIdeal I = random_ideal(R, rng);
    FreeResolution res = resolve_quotient(Ring(R), I);
    INFO(I.to_string());
    CHECK(res.complete);
    CHECK(res.is_complex());
    CHECK(series_of(res).reduced_numerator() == I.hilbert_series().reduced_numerator());
    CHECK(res.length() <= static_cast<int>(R->nvars()));
  }
}

TEST_CASE("ext of a complete intersection", "[homology]") {
  auto R = PolynomialRing::create(32003, 4);
  FreeResolution res = resolve_quotient(Ring(R), ideal(R, {"x0", "x1^2"}));
  CHECK(ext(res, 0).module.is_zero());
  CHECK(ext(res, 1).module.is_zero());
  ExtModule e2 = ext(res, 2);
  REQUIRE(e2.module.num_generators() == 1);
  CHECK(e2.module.degrees() == Degrees{-3});
  CHECK(e2.module.hilbert_series() == ideal(R, {"x0", "x1^2"}).hilbert_series().shifted(-3));
  CHECK(ext(res, 3).module.is_zero());
}

TEST_CASE("graded dual reverses the Hilbert function", "[homology]") {
  auto R = PolynomialRing::create(32003, 3);
  auto N = ModulePresentation::cyclic_quotient(
      Ring(R), ideal(R, {"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"}));
  CHECK(finite_hilbert_function(N) == std::map<int, long long>{{0, 1}, {1, 3}});
  CHECK(finite_hilbert_function(graded_dual(N)) == std::map<int, long long>{{-1, 3}, {0, 1}});
  // asymmetric example
  auto M = ModulePresentation::cyclic_quotient(Ring(R), ideal(R, {"x0^2", "x0*x1", "x1^3", "x2"}));
  CHECK(finite_hilbert_function(M) == std::map<int, long long>{{0, 1}, {1, 2}, {2, 1}});
  auto D = graded_dual(M);
  CHECK(finite_hilbert_function(D) == std::map<int, long long>{{-2, 1}, {-1, 2}, {0, 1}});
  CHECK(finite_hilbert_function(graded_dual(D)) == finite_hilbert_function(M));
}

TEST_CASE("pruning a bare matrix", "[homology]") {
  auto R = PolynomialRing::create(32003, 3);
  Matrix m = Matrix::from_rows(R, {polys(R, {"1", "x0"}), polys(R, {"x1", "x2"})}, 2);
  Matrix p = prune_units(Ring(R), m);
  REQUIRE(p.rows() == 1);
  REQUIRE(p.cols() == 1);
  CHECK(p(0, 0) == poly(R, "x2 - x0*x1"));
}

TEST_CASE("pruning a graded presentation", "[homology]") {
  auto R = PolynomialRing::create(32003, 3);
  Ring P(R);
  Matrix m = Matrix::from_rows(R, {polys(R, {"x0", "x1^2"}), polys(R, {"1", "0"})}, 2);
  ModulePresentation M(GradedMap(P, {0, 1}, {1, 2}, m));
  PrunedPresentation pr = minimize(M);
  CHECK(pr.kept == std::vector<std::size_t>{0});
  CHECK(pr.module.degrees() == Degrees{0});
  CHECK(pr.module.hilbert_series() == M.hilbert_series());
  CHECK(pr.module.hilbert_series() == ideal(R, {"x1^2"}).hilbert_series());
  // generator 1 equals -x0 times generator 0
  CHECK(pr.old_to_new(0, 1) == poly(R, "-x0"));
}

TEST_CASE("kernel, image and cokernel of multiplication", "[homology]") {
  auto R = PolynomialRing::create(32003, 2);
  Ring P(R);
  auto A = ModulePresentation::cyclic_quotient(P, ideal(R, {"x0^2"}));
  ModuleMap h{A.twisted(-1), A, Matrix::from_rows(R, {polys(R, {"x0"})}, 1)};
  CHECK(is_well_defined(h));
  HilbertSeries k = kernel(h).module.hilbert_series();
  HilbertSeries i = image(h).module.hilbert_series();
  HilbertSeries c = cokernel(h).hilbert_series();
  CHECK(k.value(1) == 0);
  CHECK(k.value(2) == 1);
  CHECK(k.value(7) == 1);
  CHECK(i.value(0) == 0);
  CHECK(i.value(5) == 1);
  CHECK(c.value(5) == 1);
  CHECK(c + i == A.hilbert_series());
  ModuleMap id{A, A, Matrix::from_rows(R, {polys(R, {"1"})}, 1)};
  CHECK(is_well_defined(id));
  // x1 does not kill x0^2 * (generator of S/(x0)), so S/(x0) -> S/(x0^2) by 1 is not a map
  auto B = ModulePresentation::cyclic_quotient(P, ideal(R, {"x0"}));
  ModuleMap bad{B, A, Matrix::from_rows(R, {polys(R, {"1"})}, 1)};
  CHECK_FALSE(is_well_defined(bad));
}

TEST_CASE("fibered sum and annihilators", "[homology]") {
  auto R = PolynomialRing::create(32003, 3);
  Ring P(R);
  auto F = ModulePresentation::free(P, {0});
  auto F1 = ModulePresentation::free(P, {1});
  Matrix x0 = Matrix::from_rows(R, {polys(R, {"x0"})}, 1);
  ModulePresentation push = fibered_sum(F1, F, F, x0, x0);
  CHECK(push.hilbert_series() == F.hilbert_series() + F.hilbert_series() - F1.hilbert_series());
  CHECK(annihilator(ModulePresentation::cyclic_quotient(P, ideal(R, {"x0", "x1^2"}))) ==
        ideal(R, {"x0", "x1^2"}));
  auto sum = direct_sum(ModulePresentation::cyclic_quotient(P, ideal(R, {"x0"})),
                        ModulePresentation::cyclic_quotient(P, ideal(R, {"x1"})));
  CHECK(annihilator(sum) == ideal(R, {"x0*x1"}));
}

TEST_CASE("resolutions over a quadric surface are periodic", "[homology]") {
  auto R = PolynomialRing::create(32003, 4);
  Ring X(R, poly(R, "x0*x1 - x2*x3"));
  FreeResolution res = resolve_quotient(X, ideal(R, {"x0", "x2", "x0*x1 - x2*x3"}), 5);
  CHECK_FALSE(res.complete);
  CHECK(res.is_complex());
  CHECK(res.betti().totals() == std::vector<int>{1, 2, 2, 2, 2, 2});
  for (int i = 1; i <= 5; ++i) CHECK(res.betti().at(i, i) == 2);
}

TEST_CASE("betti table display", "[homology]") {
  BettiTable b = betti_of({{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
  CHECK(b.to_string() ==
        "       0 1 2 3\n"
        "total: 1 4 4 1\n"
        "    0: 1 . . .\n"
        "    1: . 4 4 1");
}
