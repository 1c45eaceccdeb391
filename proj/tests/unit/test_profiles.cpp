#include <doctest.h>

#include <cmath>
#include <random>

#include <pulsefront/errors.hpp>
#include <pulsefront/profiles.hpp>
#include <pulsefront/quadrature.hpp>

#include "catalog.hpp"

using namespace pulsefront;

TEST_CASE("point evaluation") {
  CHECK(PeriodicProfile::constant(3.0)(17.25) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(PeriodicProfile::sinusoid(1.0, 0.5, 1)(0.25) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(PeriodicProfile::piecewise_constant({0.0, 0.5}, {1.0, 4.0})(0.75) == 4.0);
  CHECK(PeriodicProfile::reciprocal_sinusoid(0.3)(0.25) ==
        doctest::Approx(1.0 / 1.3).epsilon(1e-15));

  // grid kind interpolates linearly between uniform samples
  PeriodicProfile g = PeriodicProfile::grid({1.0, 3.0, 2.0, 0.0});
  CHECK(g(0.0) == doctest::Approx(1.0));
  CHECK(g(0.125) == doctest::Approx(2.0));
  CHECK(g(0.875) == doctest::Approx(0.5));  // wraps toward samples[0]
}

TEST_CASE("evaluation is 1-periodic") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ux(-3.0, 3.0);
  for (const auto& [name, pair] : testing::catalog_pairs()) {
    CAPTURE(name);
    for (int i = 0; i < 50; ++i) {
      const double x = ux(rng);
      CHECK(pair.a(x + 1.0) == doctest::Approx(pair.a(x)).epsilon(1e-12));
      CHECK(pair.mu(x + 1.0) == doctest::Approx(pair.mu(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("means") {
  CHECK(PeriodicProfile::sinusoid(1.0, 0.5, 1).arithmetic_mean() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(PeriodicProfile::piecewise_constant({0.0, 0.5}, {1.0, 4.0}).arithmetic_mean() ==
        doctest::Approx(2.5).epsilon(1e-15));
  CHECK(PeriodicProfile::constant(2.75).arithmetic_mean() == 2.75);

  CHECK(PeriodicProfile::constant(1.7).harmonic_mean() == doctest::Approx(1.7));
  // closed form: int 1/a = 0.5 + 0.125 = 0.625
  CHECK(PeriodicProfile::piecewise_constant({0.0, 0.5}, {1.0, 4.0}).harmonic_mean() ==
        doctest::Approx(1.6).epsilon(1e-15));
  // int (1 + 0.3 sin) = 1
  CHECK(PeriodicProfile::reciprocal_sinusoid(0.3).harmonic_mean() ==
        doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(
      PeriodicProfile::piecewise_constant({0.0, 0.5}, {1.0, 0.0}).harmonic_mean(),
      NonPositiveProfile);
}

TEST_CASE("AM-HM inequality, equality only for constants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    PeriodicProfile p = testing::random_diffusivity(rng);
    const double am = p.arithmetic_mean();
    const double hm = p.harmonic_mean();
    CHECK(hm <= am + 1e-12 * std::abs(am));
    if (p.kind() == ProfileKind::Constant) {
      CHECK(hm == doctest::Approx(am).epsilon(1e-14));
    }
  }
  // strictness for a genuinely varying profile
  PeriodicProfile p = PeriodicProfile::piecewise_constant({0.0, 0.5}, {1.0, 4.0});
  CHECK(p.harmonic_mean() < p.arithmetic_mean() - 0.5);
}

TEST_CASE("quadrature grid refinement") {
  // smooth kinds: midpoint refinement differences decay at least at O(n^-2)
  PeriodicProfile p = PeriodicProfile::reciprocal_sinusoid(0.6);
  auto mean_at = [&](int n) {
    return midpoint_unit_integral([&](double x) { return p(x); }, n);
  };
  const double d1 = std::abs(mean_at(64) - mean_at(128));
  const double d2 = std::abs(mean_at(128) - mean_at(256));
  CHECK(d1 <= 1.0 / (64.0 * 64.0));
  CHECK(d2 <= d1 + 1e-15);

  // piecewise-constant means are segment-exact, independent of any grid
  PeriodicProfile q = PeriodicProfile::piecewise_constant({0.0, 0.37}, {2.0, 0.5});
  CHECK(q.arithmetic_mean() == 0.37 * 2.0 + 0.63 * 0.5);
}

TEST_CASE("mean_on handles wrapped windows exactly for piecewise") {
  PeriodicProfile p = PeriodicProfile::piecewise_constant({0.0, 0.5}, {1.0, 4.0});
  CHECK(p.mean_on(0.25, 0.75) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(p.mean_on(0.75, 1.25) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(p.harmonic_mean_on(0.0, 0.5) == doctest::Approx(1.0));
  CHECK(p.harmonic_mean_on(0.9, 1.1) == doctest::Approx(0.2 / (0.1 / 4.0 + 0.1)));
}

TEST_CASE("patch profiles") {
  SUBCASE("unfragmented z=0") {
    ProfilePair p = build_patch_profiles({1.0, 0.8, 0.0, 1.0});
    CHECK(p.mu(0.4) == 1.0);
    CHECK(p.mu(0.79) == 1.0);
    CHECK(p.mu(0.85) == 0.0);
    CHECK(p.a(0.3) == 1.0);
  }
  SUBCASE("fragmented z=0.1") {
    ProfilePair p = build_patch_profiles({1.0, 0.8, 0.1, 1.0});
    CHECK(p.mu(0.2) == 1.0);   // [0, 0.4)
    CHECK(p.mu(0.45) == 0.0);  // gap [0.4, 0.5)
    CHECK(p.mu(0.7) == 1.0);   // [0.5, 0.9)
    CHECK(p.mu(0.95) == 0.0);
  }
  SUBCASE("gap at the far end z = L0 - l") {
    ProfilePair p = build_patch_profiles({1.0, 0.8, 0.2, 1.0});
    CHECK(p.mu(0.2) == 1.0);
    CHECK(p.mu(0.5) == 0.0);
    CHECK(p.mu(0.7) == 1.0);
    CHECK(p.mu(0.99) == 1.0);
  }
  SUBCASE("habitat measure") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
      PatchConfig cfg;
      cfg.L0 = 0.5 + 2.0 * u(rng);
      cfg.l = cfg.L0 * (0.1 + 0.8 * u(rng));
      cfg.z = (cfg.L0 - cfg.l) * u(rng);
      cfg.m = 0.2 + 3.0 * u(rng);
      ProfilePair p = build_patch_profiles(cfg);
      CHECK(p.mu.arithmetic_mean() ==
            doctest::Approx(cfg.m * cfg.l / cfg.L0).epsilon(1e-13));
    }
  }
  SUBCASE("invalid geometry") {
    CHECK_THROWS_AS(build_patch_profiles({1.0, 0.8, 0.3, 1.0}), InvalidPatchGeometry);
    CHECK_THROWS_AS(build_patch_profiles({1.0, 1.2, 0.0, 1.0}), InvalidPatchGeometry);
    CHECK_THROWS_AS(build_patch_profiles({1.0, 0.8, -0.05, 1.0}), InvalidPatchGeometry);
    CHECK_THROWS_AS(build_patch_profiles({1.0, 0.8, 0.1, 0.0}), InvalidPatchGeometry);
  }
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(PeriodicProfile::piecewise_constant({0.5, 0.2}, {1.0, 2.0}),
                  InvalidProfile);
  CHECK_THROWS_AS(PeriodicProfile::piecewise_constant({0.0, 1.0}, {1.0, 2.0}),
                  InvalidProfile);
  CHECK_THROWS_AS(PeriodicProfile::piecewise_constant({0.0}, {1.0, 2.0}),
                  InvalidProfile);
  CHECK_THROWS_AS(PeriodicProfile::reciprocal_sinusoid(1.0), InvalidProfile);
  CHECK_THROWS_AS(PeriodicProfile::grid({1.0}), InvalidProfile);
  CHECK_THROWS_AS(PeriodicProfile::sinusoid(1.0, 0.1, 0), InvalidProfile);

  // pair construction rejects sign-indefinite diffusivities
  CHECK_THROWS_AS(ProfilePair(PeriodicProfile::sinusoid(1.0, 1.5, 1),
                              PeriodicProfile::constant(1.0)),
                  NonPositiveProfile);
}
