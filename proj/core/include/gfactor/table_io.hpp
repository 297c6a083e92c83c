#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfactor/solver.hpp"

namespace gfactor {

inline constexpr std::string_view kSweepCsvHeader =
    "t,composition,a_angstrom,eg_gamma_ev,eg_min_ev,character,g";

/// One sweep row in its serialized field layout. Numeric fields survive a
/// CSV round trip bit for bit.
struct SweepCsvRow {
  double t = 0.0;
  std::string composition;
  double a_angstrom = 0.0;
  double eg_gamma_ev = 0.0;
  double eg_min_ev = 0.0;
  std::string character;
  double g = 0.0;

  friend bool operator==(const SweepCsvRow&, const SweepCsvRow&) = default;
};

SweepCsvRow project_row(const SweepRow& row);

/// Header plus one line per row, shortest round-trip decimal form for every
/// number; byte-deterministic for identical tables.
std::string to_csv(const SweepTable& table);

/// Strict parse of to_csv output: exact header, exactly 7 fields per row,
/// ParseError with a line number otherwise.
std::vector<SweepCsvRow> parse_sweep_csv(std::string_view text);

}  // namespace gfactor
