#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "acplus/discmaps.hpp"
#include "acplus/errors.hpp"
#include "acplus/symbol.hpp"

using namespace acp;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
}  // namespace

TEST_CASE("builtin registry resolves the four named symbols") {
  for (const char* name : {"example1_not_GA", "example2_GA_not_UC",
                           "prop_algebrab_phi", "prop_algebrab_F"}) {
    CAPTURE(name);
    CHECK_NOTHROW(Symbol::builtin(name));
  }
  CHECK_THROWS_AS(Symbol::builtin("nope"), Error);
}

TEST_CASE("disc maps resolve by name and round-trip their names") {
  for (const char* name : {"identity", "koebe", "singular_inner_plus_one",
                           "half_strip", "log_phase_cayley", "slit_disc"}) {
    auto m = DiscMap::by_name(name);
    REQUIRE(m.has_value());
    CHECK(std::string(m->name()) == name);
  }
  CHECK(!DiscMap::by_name("moebius").has_value());
}

TEST_CASE("two-term symbol evaluates to its defining series") {
  Symbol phi = Symbol::builtin("prop_algebrab_phi");
  cplx v = phi.evaluate(cplx(2.0, 0.0));
  CHECK(v.real() == doctest::Approx(0.5 / 4.0 - 0.5 / 9.0).epsilon(1e-15));
  CHECK(v.imag() == 0.0);
  CHECK(phi.series_backed());
  CHECK(phi.characteristic() == 0);
  CHECK_THROWS_AS(phi.map_part(), Error);
}

TEST_CASE("singular-inner symbol matches the closed form at s = 1") {
  Symbol phi = Symbol::builtin("example1_not_GA");
  // inner value 2^{-1} = 1/2, exp((z+1)/(z-1)) = e^{-3}
  cplx v = phi.evaluate(cplx(1.0, 0.0));
  CHECK(v.real() == doctest::Approx(1.0 + std::exp(-3.0)).epsilon(1e-15));
  CHECK(std::abs(v.imag()) <= 1e-15);
  CHECK(!phi.series_backed());
  CHECK_THROWS_AS(phi.series_part(), Error);
}

TEST_CASE("half-strip symbol approaches (2/pi) asinh(1) far right") {
  Symbol phi = Symbol::builtin("example2_GA_not_UC");
  cplx v = phi.evaluate(cplx(50.0, 0.0));
  double want = (2.0 / kPi) * std::log(1.0 + std::sqrt(2.0));
  CHECK(v.real() == doctest::Approx(want).epsilon(1e-12));
  CHECK(std::abs(v.imag()) <= 1e-12);
}

TEST_CASE("log-phase symbol is unimodular on the real axis") {
  Symbol F = Symbol::builtin("prop_algebrab_F");
  for (double sigma : {0.5, 1.0, 2.0, 10.0}) {
    CAPTURE(sigma);
    CHECK(std::abs(F.evaluate(cplx(sigma, 0.0))) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("evaluation requires the open right half-plane") {
  Symbol phi = Symbol::builtin("prop_algebrab_phi");
  CHECK_THROWS_AS(phi.evaluate(cplx(0.0, 1.0)), Error);
  CHECK_THROWS_AS(phi.evaluate(cplx(-1.0, 0.0)), Error);
}

TEST_CASE("characteristic must be non-negative") {
  CHECK_THROWS_AS(Symbol(-1, Series::constant(1.0)), Error);
}

TEST_CASE("fringe is the non-affine part") {
  Symbol phi(2, Series({{1, cplx(0.5, 0.25)}, {3, 0.125}}, 3));
  cplx s(1.5, -2.0);
  CHECK(std::abs(phi.evaluate(s) - (2.0 * s + phi.fringe(s))) <= 1e-15);
}

TEST_CASE("period detects single-base supports") {
  auto inner_period = Symbol::builtin("example1_not_GA").period();
  REQUIRE(inner_period.has_value());
  CHECK(*inner_period == doctest::Approx(2.0 * kPi / kLn2).epsilon(1e-15));
  // support {2, 4} is all powers of 2
  Symbol two_four(1, Series({{1, 1.0}, {2, 0.25}, {4, 0.125}}, 4));
  REQUIRE(two_four.period().has_value());
  CHECK(*two_four.period() == doctest::Approx(2.0 * kPi / kLn2).epsilon(1e-15));
  // support {2, 3} is not
  CHECK(!Symbol::builtin("prop_algebrab_phi").period().has_value());
  // constant fringe has no period
  CHECK(!Symbol(1, Series::constant(1.0)).period().has_value());
}

TEST_CASE("translate shifts the evaluation point") {
  Symbol phi(1, Series({{1, 1.0}, {2, cplx(0.3, -0.2)}, {5, 0.1}}, 5));
  Symbol shifted = phi.translate(0.5);
  for (cplx s : {cplx(0.5, 1.0), cplx(2.0, -3.0)}) {
    cplx want = phi.evaluate(s + 0.5);
    cplx got = shifted.evaluate(s);
    CHECK(std::abs(got - want) <= 1e-13 * (1.0 + std::abs(want)));
  }
  Symbol m = Symbol::builtin("example1_not_GA").translate(0.25);
  cplx want = Symbol::builtin("example1_not_GA").evaluate(cplx(1.25, 0.5));
  CHECK(std::abs(m.evaluate(cplx(1.0, 0.5)) - want) <= 1e-13);
  CHECK_THROWS_AS(phi.translate(-0.1), Error);
}

TEST_CASE("half-plane membership: shifts pass, dips fail") {
  RegionSpec region{3.0, 2.0, 5.0, 1e-2};
  auto shift = classify_G_infty(Symbol(1, Series::constant(1.0)), region);
  CHECK(shift.in_class);
  CHECK(shift.grid_min >= 1.0);
  CHECK(!shift.counterexample.has_value());

  // 0.1 - 0.2 * 2^{-s} dips below Re = 0 near the boundary
  auto dip = classify_G_infty(
      Symbol(0, Series({{1, 0.1}, {2, -0.2}}, 2)), region);
  CHECK(!dip.in_class);
  CHECK(dip.grid_min < 0.0);
  REQUIRE(dip.counterexample.has_value());
  CHECK(dip.counterexample->re_phi == dip.grid_min);
}

TEST_CASE("G separates deep range from shallow range") {
  RegionSpec region{3.0, 2.0, 5.0, 1e-2};
  auto deep = classify_G(Symbol(0, Series({{1, 0.75}, {2, 0.125}}, 2)), region);
  CHECK(deep.in_class);
  CHECK(deep.grid_min >= 0.5);

  auto shallow =
      classify_G(Symbol(0, Series({{1, 0.3}, {2, 0.125}}, 2)), region);
  CHECK(!shallow.in_class);
  CHECK(shallow.grid_min > 0.0);     // still a self-map...
  CHECK(shallow.grid_min < 0.5);     // ...but the range is too shallow
  REQUIRE(shallow.counterexample.has_value());

  // positive characteristic alone suffices
  auto affine = classify_G(Symbol(1, Series::constant(0.01)), region);
  CHECK(affine.in_class);
}

TEST_CASE("band continuity probe stays quiet on a smooth symbol") {
  Symbol phi(1, Series({{1, 1.0}, {2, 1.0}}, 2));
  RegionSpec region{3.0, 2.0, 2.0, 1e-3};
  auto probe = probe_G_A(phi, region, {1e-2, 1e-3});
  REQUIRE(probe.omega.size() == 2);
  CHECK(probe.deltas[0] == 1e-2);  // sorted descending
  CHECK(probe.points_retained > 0);
  CHECK(probe.omega[0] >= probe.omega[1]);  // pair sets nest
  CHECK(probe.omega[1] > 0.0);
  CHECK(probe.omega[1] <= 5e-3);
  CHECK(probe.omega[0] <= 2e-2);
  CHECK(!probe.violated);
  REQUIRE(probe.worst_pairs[1].has_value());
  CHECK(probe.worst_pairs[1]->gap <= 1e-3 * (1.0 + 1e-9));
}

TEST_CASE("band continuity probe flags the singular-inner symbol") {
  Symbol phi = Symbol::builtin("example1_not_GA");
  RegionSpec region{3.0, 2.0, 3.0, 2e-3};
  auto probe = probe_G_A(phi, region, {1e-2, 1e-3});
  CHECK(probe.violated);
  CHECK(probe.omega.back() >= 0.3);
}

TEST_CASE("probe cost guard rejects oversized pair searches") {
  Symbol phi(1, Series::constant(1.0));
  RegionSpec region{3.0, 2.0, 10.0, 1e-3};
  CHECK_THROWS_AS(probe_G_A(phi, region, {0.5}), Error);
}

TEST_CASE("probe preconditions") {
  Symbol phi(1, Series::constant(1.0));
  RegionSpec region{3.0, 2.0, 1.0, 1e-2};
  CHECK_THROWS_AS(probe_G_A(phi, region, {}), Error);
  CHECK_THROWS_AS(probe_G_A(phi, region, {1e-2, -1.0}), Error);
}

TEST_CASE("compactness: certified for a strict shift") {
  RegionSpec region{3.0, 2.0, 5.0, 1e-2};
  auto rep = compactness_diagnostic(Symbol(1, Series::constant(1.0)), region);
  CHECK(rep.compact);
  CHECK(rep.certified);
  CHECK(rep.epsilon == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rep.observed_inf >= 1.0);
}

TEST_CASE("compactness: boundary-hugging shift is not certified") {
  RegionSpec region{3.0, 2.0, 10.0, 1e-2};
  auto rep = compactness_diagnostic(
      Symbol(1, Series({{1, 1.0}, {2, 1.0}}, 2)), region);
  CHECK(!rep.compact);
  CHECK(!rep.certified);
  CHECK(rep.epsilon == 0.0);
  CHECK(rep.observed_inf <= 0.05);
  CHECK(rep.observed_inf >= 0.0);
}

TEST_CASE("classify aggregates all four diagnostics") {
  RegionSpec region{3.0, 2.0, 2.0, 5e-3};
  auto rep = classify(Symbol(1, Series({{1, 1.0}, {2, 1.0}}, 2)), region);
  CHECK(rep.g_infty.in_class);
  CHECK(rep.g.in_class);
  CHECK(!rep.ga.violated);
  CHECK(!rep.compactness.compact);
}
