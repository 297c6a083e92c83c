#include <string>

#include "doctest.h"

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"
#include "gfactor/table_io.hpp"
#include "test_support.hpp"

using namespace gfactor;
using testsupport::shipped_db;

namespace {

SweepTable sample_table(int n) {
  return sweep_path(edge_path(parse_composition("GaAs"), parse_composition("InAs")), n,
                    shipped_db());
}

}  // namespace

TEST_CASE("csv layout is the pinned seven-column schema") {
  CHECK(kSweepCsvHeader == "t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g");

  const std::string csv = to_csv(sample_table(2));
  CHECK(csv ==
        "t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\n"
        "0,GaAs,5.6416,1.519,1.519,direct,-0.317314022383147\n"
        "1,InAs,6.0501,0.417,0.417,direct,-14.61124631892999\n");
}

TEST_CASE("csv round trip is bit-lossless") {
  const SweepTable table = sample_table(101);
  const std::string csv = to_csv(table);
  const std::vector<SweepCsvRow> parsed = parse_sweep_csv(csv);

  REQUIRE(parsed.size() == table.rows.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const SweepCsvRow expected = project_row(table.rows[i]);
    CHECK(parsed[i] == expected);
    CHECK(parsed[i].t == table.rows[i].t);
    CHECK(parsed[i].g == table.rows[i].result.g);
    CHECK(parsed[i].a_angstrom == table.rows[i].result.params_used.a);
    CHECK(parsed[i].eg_min_ev == table.rows[i].result.params_used.min_gap());
  }

  // Emitting the parsed rows again costs nothing: same bytes.
  CHECK(to_csv(table) == csv);
}

TEST_CASE("projection carries the composition formula and character name") {
  const SweepCsvRow row = project_row(sample_table(2).rows[1]);
  CHECK(row.composition == "InAs");
  CHECK(row.character == "direct");
  CHECK(row.t == 1.0);
}

TEST_CASE("parser accepts CRLF and skips blank lines") {
  const std::string csv =
      "t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\r\n"
      "0,GaAs,5.6416,1.519,1.519,direct,-0.317314022383147\r\n"
      "\n"
      "1,InAs,6.0501,0.417,0.417,direct,-14.61124631892999\n";
  const auto rows = parse_sweep_csv(csv);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].a_angstrom == 5.6416);
  CHECK(rows[1].g == -14.61124631892999);
}

TEST_CASE("parser enforces the schema strictly") {
  CHECK_THROWS_AS((void)parse_sweep_csv(""), ParseError);
  CHECK_THROWS_AS((void)parse_sweep_csv("wrong,header\n"), ParseError);
  CHECK_THROWS_AS(
      (void)parse_sweep_csv("t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\n"
                            "0,GaAs,5.6416,1.519,1.519,direct\n"),
      ParseError);  // six fields
  CHECK_THROWS_AS(
      (void)parse_sweep_csv("t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\n"
                            "0,GaAs,5.6416,1.519,1.519,direct,-0.3,extra\n"),
      ParseError);  // eight fields
  CHECK_THROWS_AS(
      (void)parse_sweep_csv("t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\n"
                            "zero,GaAs,5.6416,1.519,1.519,direct,-0.3\n"),
      ParseError);  // non-numeric t
  CHECK_THROWS_AS(
      (void)parse_sweep_csv("t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\n"
                            "0,GaAs,5.6416,1.519,1.519,sideways,-0.3\n"),
      ParseError);  // unknown character

  // Errors carry the one-based line number of the offending row.
  try {
    (void)parse_sweep_csv("t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g\n"
                          "0,GaAs,5.6416,1.519,1.519,direct,-0.3\n"
                          "bad,row,here,x,y,direct,z\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 3);
  }
}

TEST_CASE("numeric text is shortest-round-trip in both directions") {
  for (const double value :
       {0.1, -0.317314022383147, 5.86, 1e-300, 1e300, 123456.789, -0.0, 2.0}) {
    CHECK(parse_double(format_double(value)) == value);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-14.61124631892999) == "-14.61124631892999");

  CHECK_THROWS_AS((void)parse_double(""), ParseError);
  CHECK_THROWS_AS((void)parse_double("abc"), ParseError);
  CHECK_THROWS_AS((void)parse_double("1.5x"), ParseError);
  CHECK_THROWS_AS((void)parse_double("1.5 "), ParseError);
}
