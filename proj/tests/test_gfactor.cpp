#include <cmath>
#include <random>

#include "doctest.h"

#include "gfactor/gfactor.hpp"
#include "gfactor/errors.hpp"
#include "test_support.hpp"

using namespace gfactor;
using testsupport::shipped_db;

TEST_CASE("vanishing spin-orbit or coupling gives the free-electron value exactly") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> eg_dist(1e-3, 6.0);
  std::uniform_real_distribution<double> other(0.0, 40.0);
  for (int i = 0; i < 10000; ++i) {
    const double eg = eg_dist(rng);
    CHECK(roth_g(eg, 0.0, other(rng)) == 2.0);
    CHECK(roth_g(eg, other(rng), 0.0) == 2.0);
  }
}

TEST_CASE("pinned scalar values") {
  // Frozen shortest round-trip values; exact equality pins the IEEE
  // evaluation order.
  CHECK(roth_g(1.424, 0.108, 20.7) == 1.3168216622172677);
  CHECK(roth_g(1.4236, 0.108, 20.7) == 1.3164512320058448);
  CHECK(roth_g(0.8, 0.10, 22.0) == -0.03703703703703676);

  CHECK(roth_g(1.424, 0.108, 20.7) == doctest::Approx(1.317).epsilon(1e-3));
  CHECK(roth_g(0.8, 0.10, 22.0) == doctest::Approx(-0.037).epsilon(2e-2));

  // The correction term is the exact complement.
  const double g = roth_g(1.4236, 0.108, 20.7);
  CHECK(g == 2.0 - roth_correction_term(1.4236, 0.108, 20.7));
}

TEST_CASE("domain validation of the three-level formula") {
  CHECK_THROWS_AS((void)roth_g(0.0, 0.1, 22.0), DomainError);
  CHECK_THROWS_AS((void)roth_g(-1.0, 0.1, 22.0), DomainError);
  CHECK_THROWS_AS((void)roth_g(1.0, -0.1, 22.0), DomainError);
  CHECK_THROWS_AS((void)roth_g(1.0, 0.1, -22.0), DomainError);
  const double nan = std::nan("");
  CHECK_THROWS_AS((void)roth_g(nan, 0.1, 22.0), DomainError);
  CHECK_THROWS_AS((void)roth_g(1.0, nan, 22.0), DomainError);
  CHECK_THROWS_AS((void)roth_g(1.0, 0.1, nan), DomainError);
}

TEST_CASE("g sits below 2 whenever the correction is active") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> eg_dist(1e-2, 6.0);
  std::uniform_real_distribution<double> delta_dist(1e-6, 2.0);
  std::uniform_real_distribution<double> ep_dist(1e-6, 35.0);
  for (int i = 0; i < 10000; ++i)
    CHECK(roth_g(eg_dist(rng), delta_dist(rng), ep_dist(rng)) < 2.0);
}

TEST_CASE("monotonicity in each argument") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> eg_dist(0.1, 5.0);
  std::uniform_real_distribution<double> delta_dist(1e-3, 1.5);
  std::uniform_real_distribution<double> ep_dist(1.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double eg = eg_dist(rng);
    const double delta = delta_dist(rng);
    const double ep = ep_dist(rng);

    // Pairwise sampling.
    CHECK(roth_g(eg * 1.01, delta, ep) > roth_g(eg, delta, ep));
    CHECK(roth_g(eg, delta * 1.01, ep) < roth_g(eg, delta, ep));
    CHECK(roth_g(eg, delta, ep * 1.01) < roth_g(eg, delta, ep));

    // Central differences at relative step 1e-6.
    const double h_eg = 1e-6 * eg;
    const double h_delta = 1e-6 * delta;
    const double h_ep = 1e-6 * ep;
    CHECK(roth_g(eg + h_eg, delta, ep) - roth_g(eg - h_eg, delta, ep) > 0.0);
    CHECK(roth_g(eg, delta + h_delta, ep) - roth_g(eg, delta - h_delta, ep) < 0.0);
    CHECK(roth_g(eg, delta, ep + h_ep) - roth_g(eg, delta, ep - h_ep) < 0.0);
  }
}

TEST_CASE("gap classification and the tie-break") {
  AlloyParams p;
  p.a = 5.6;
  p.delta_so = 0.3;
  p.e_p = 25.0;

  p.eg_gamma = 1.5;
  p.eg_x = 2.0;
  p.eg_l = 1.8;
  CHECK(classify_gap(p) == GapCharacter::Direct);

  p.eg_gamma = 2.5;
  CHECK(classify_gap(p) == GapCharacter::Indirect);

  // Equal gaps classify Direct: the three-level formula still applies at the
  // crossover itself.
  p.eg_gamma = 2.0;
  p.eg_x = 2.0;
  p.eg_l = 2.0;
  CHECK(classify_gap(p) == GapCharacter::Direct);
  CHECK(p.min_gap() == 2.0);
}

TEST_CASE("direct results decompose exactly, indirect pin g at 2") {
  const MaterialsDatabase& db = shipped_db();
  for (const BinaryCompound& rec : db.records().compounds) {
    const GFactorResult r = electron_g(Composition::pure_binary(rec.cation, rec.anion), db);
    if (r.character == GapCharacter::Direct) {
      CHECK(r.g == 2.0 - r.roth_correction);
      CHECK(r.g == roth_g(rec.eg_gamma, rec.delta_so, rec.e_p));
    } else {
      CHECK(r.g == 2.0);
      CHECK(r.roth_correction == 0.0);
    }
  }
}

TEST_CASE("shipped binaries land where they should") {
  const MaterialsDatabase& db = shipped_db();
  auto g_of = [&](const char* name) { return electron_g(parse_composition(name), db); };

  const GFactorResult inp = g_of("InP");
  CHECK(inp.character == GapCharacter::Direct);
  CHECK(inp.g > 0.0);
  CHECK(inp.g == 1.3164512320058448);

  CHECK(g_of("GaAs").g == -0.317314022383147);
  CHECK(g_of("InAs").g == -14.61124631892999);
  CHECK(g_of("GaSb").g == -8.717106005339751);
  CHECK(g_of("InSb").g == -49.23485696833962);
  CHECK(g_of("InSb").g < -40.0);

  for (const char* name : {"GaP", "AlAs", "AlSb", "AlP"}) {
    const GFactorResult r = g_of(name);
    CHECK(r.character == GapCharacter::Indirect);
    CHECK(r.g == 2.0);
  }
}

TEST_CASE("wavelength conversion") {
  CHECK(gap_to_wavelength(0.8) == 1.5498);
  CHECK(gap_to_wavelength(kEvMicrometre) == 1.0);
  CHECK(wavelength_to_gap(1.3) == 0.9537230769230769);

  CHECK_THROWS_AS((void)gap_to_wavelength(0.0), DomainError);
  CHECK_THROWS_AS((void)gap_to_wavelength(-0.8), DomainError);
  CHECK_THROWS_AS((void)wavelength_to_gap(0.0), DomainError);

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> eg_dist(0.05, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double eg = eg_dist(rng);
    CHECK(wavelength_to_gap(gap_to_wavelength(eg)) == doctest::Approx(eg).epsilon(1e-12));
  }
}

TEST_CASE("gap character names round-trip") {
  CHECK(gap_character_name(GapCharacter::Direct) == "direct");
  CHECK(gap_character_name(GapCharacter::Indirect) == "indirect");
  CHECK(parse_gap_character("direct") == GapCharacter::Direct);
  CHECK(parse_gap_character("indirect") == GapCharacter::Indirect);
  CHECK_FALSE(parse_gap_character("sideways").has_value());
}
