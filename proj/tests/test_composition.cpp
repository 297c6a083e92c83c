#include "doctest.h"

#include "gfactor/composition.hpp"
#include "gfactor/errors.hpp"

using namespace gfactor;

TEST_CASE("binary formula parses to a pure binary") {
  const Composition c = parse_composition("GaAs");
  CHECK(c.is_pure_binary());
  REQUIRE(c.cations().size() == 1);
  REQUIRE(c.anions().size() == 1);
  CHECK(c.cations()[0].element == Element::Ga);
  CHECK(c.cations()[0].fraction == 1.0);
  CHECK(c.anions()[0].element == Element::As);
  CHECK(c.anions()[0].fraction == 1.0);
  CHECK(c.formula() == "GaAs");
  CHECK(c == Composition::pure_binary(Element::Ga, Element::As));
}

TEST_CASE("ternary formula keeps exact fractions") {
  const Composition c = parse_composition("Ga0.47In0.53As");
  CHECK_FALSE(c.is_pure_binary());
  REQUIRE(c.cations().size() == 2);
  CHECK(c.cations()[0].element == Element::Ga);
  CHECK(c.cations()[0].fraction == 0.47);
  CHECK(c.cations()[1].element == Element::In);
  CHECK(c.cations()[1].fraction == 0.53);
  CHECK(c.formula() == "Ga0.47In0.53As");
}

TEST_CASE("formula is canonical regardless of written order") {
  const Composition a = parse_composition("In0.8Ga0.2As0.4P0.6");
  const Composition b = parse_composition("Ga0.2In0.8P0.6As0.4");
  CHECK(a == b);
  CHECK(a.formula() == "Ga0.2In0.8P0.6As0.4");
  // Round trip: the canonical form parses back to the same value.
  CHECK(parse_composition(a.formula()) == a);
}

TEST_CASE("lone element on a mixed sublattice needs an explicit fraction") {
  // A lone element may omit its fraction only when it is alone on the
  // sublattice.
  CHECK(parse_composition("InP").formula() == "InP");
  CHECK_THROWS_AS(parse_composition("GaInAs"), ParseError);
  CHECK_THROWS_AS(parse_composition("Ga0.5InAs"), ParseError);
}

TEST_CASE("fraction sums are enforced, not renormalized") {
  CHECK_THROWS_AS(parse_composition("Ga0.5In0.6As"), ParseError);
  CHECK_THROWS_AS(parse_composition("Ga0.5In0.5As0.9P0.2"), ParseError);
  // Inside the 1e-9 tolerance the input is accepted as written.
  const Composition c = parse_composition("Ga0.4999999999In0.5000000001As");
  CHECK(c.cations()[0].fraction == 0.4999999999);
}

TEST_CASE("malformed formulas are rejected with ParseError") {
  CHECK_THROWS_AS(parse_composition(""), ParseError);
  CHECK_THROWS_AS(parse_composition("Zr0.5As0.5"), ParseError);
  CHECK_THROWS_AS(parse_composition("Ga0.5In0.5"), ParseError);      // no anion
  CHECK_THROWS_AS(parse_composition("As0.5P0.5"), ParseError);       // no cation
  CHECK_THROWS_AS(parse_composition("Ga.In.As"), ParseError);        // junk fraction
  CHECK_THROWS_AS(parse_composition("Ga-0.2In1.2As"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_composition("Ga0.5Ga0.5As"), ParseError);    // duplicate
  CHECK_THROWS_AS(parse_composition("Al0.2Ga0.3In0.5As"), ParseError);  // 3 cations
  CHECK_THROWS_AS(parse_composition("Ga As"), ParseError);           // stray space
}

TEST_CASE("make rejects invariant violations with DomainError") {
  CHECK_THROWS_AS(Composition::make({{Element::Ga, 1.0}}, {}), DomainError);
  CHECK_THROWS_AS(Composition::make({{Element::Ga, 0.5}, {Element::In, 0.6}},
                                    {{Element::As, 1.0}}),
                  DomainError);
  CHECK_THROWS_AS(Composition::make({{Element::As, 1.0}}, {{Element::Ga, 1.0}}),
                  DomainError);  // swapped sublattices
}

TEST_CASE("zero-fraction entries vanish from the formula") {
  const Composition c =
      Composition::make({{Element::Ga, 1.0}, {Element::In, 0.0}}, {{Element::As, 1.0}});
  CHECK(c.formula() == "GaAs");
  // Purity is judged on active entries only.
  CHECK(c.is_pure_binary());
}

TEST_CASE("make sorts each sublattice into canonical element order") {
  const Composition c = Composition::make({{Element::In, 0.53}, {Element::Ga, 0.47}},
                                          {{Element::As, 1.0}});
  CHECK(c.cations()[0].element == Element::Ga);
  CHECK(c.cations()[1].element == Element::In);
  CHECK(c == parse_composition("Ga0.47In0.53As"));
}
