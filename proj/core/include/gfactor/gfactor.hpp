#pragma once

#include <optional>
#include <string_view>

#include "gfactor/alloy.hpp"

namespace gfactor {

/// Whether the lowest conduction-band edge sits at the zone centre.
enum class GapCharacter { Direct, Indirect };

std::string_view gap_character_name(GapCharacter character) noexcept;
std::optional<GapCharacter> parse_gap_character(std::string_view name) noexcept;

/// eV * micrometre; divide by a gap in eV to get the emission wavelength.
inline constexpr double kEvMicrometre = 1.23984;

struct GFactorResult {
  double g = 0.0;
  GapCharacter character = GapCharacter::Direct;
  /// The three-level term subtracted from the free-electron value; zero for
  /// indirect-gap material.
  double roth_correction = 0.0;
  AlloyParams params_used;

  bool operator==(const GFactorResult&) const = default;
};

/// Three-level conduction-electron g-factor:
///   g = 2 - (2/3) * e_p * delta_so / (eg * (eg + delta_so)).
/// Inputs in eV; eg must be positive, delta_so and e_p non-negative.
double roth_g(double eg, double delta_so, double e_p);

/// Correction term alone: 2 - roth_g under the same operand order.
double roth_correction_term(double eg, double delta_so, double e_p);

/// Direct exactly when the zone-centre gap is no larger than either
/// satellite-valley gap.
GapCharacter classify_gap(const AlloyParams& params) noexcept;

/// g-factor for a parameter set. Indirect material pins g to the
/// free-electron value 2 with zero correction.
GFactorResult electron_g(const AlloyParams& params);

/// Convenience: parameters, then g, for one composition.
GFactorResult electron_g(const Composition& comp, const MaterialsDatabase& db);

/// Emission wavelength in micrometres for a gap in eV, and back.
double gap_to_wavelength(double eg_ev);
double wavelength_to_gap(double lambda_um);

}  // namespace gfactor
