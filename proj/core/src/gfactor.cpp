#include "gfactor/gfactor.hpp"

#include <cmath>

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"

namespace gfactor {

std::string_view gap_character_name(GapCharacter character) noexcept {
  return character == GapCharacter::Direct ? "direct" : "indirect";
}

std::optional<GapCharacter> parse_gap_character(std::string_view name) noexcept {
  if (name == "direct") return GapCharacter::Direct;
  if (name == "indirect") return GapCharacter::Indirect;
  return std::nullopt;
}

namespace {

void check_roth_inputs(double eg, double delta_so, double e_p) {
  if (!(eg > 0.0) || !std::isfinite(eg))
    throw DomainError("zone-centre gap must be positive, got " + format_double(eg) + " eV");
  if (!(delta_so >= 0.0) || !std::isfinite(delta_so))
    throw DomainError("spin-orbit splitting must be non-negative, got " +
                      format_double(delta_so) + " eV");
  if (!(e_p >= 0.0) || !std::isfinite(e_p))
    throw DomainError("interband matrix parameter must be non-negative, got " +
                      format_double(e_p) + " eV");
}

}  // namespace

double roth_correction_term(double eg, double delta_so, double e_p) {
  check_roth_inputs(eg, delta_so, e_p);
  return (2.0 / 3.0) * (e_p * delta_so) / (eg * (eg + delta_so));
}

double roth_g(double eg, double delta_so, double e_p) {
  check_roth_inputs(eg, delta_so, e_p);
  return 2.0 - (2.0 / 3.0) * (e_p * delta_so) / (eg * (eg + delta_so));
}

GapCharacter classify_gap(const AlloyParams& params) noexcept {
  return params.eg_gamma <= std::min(params.eg_x, params.eg_l) ? GapCharacter::Direct
                                                               : GapCharacter::Indirect;
}

GFactorResult electron_g(const AlloyParams& params) {
  GFactorResult result;
  result.params_used = params;
  result.character = classify_gap(params);
  if (result.character == GapCharacter::Indirect) {
    result.g = 2.0;
    result.roth_correction = 0.0;
    return result;
  }
  result.roth_correction = roth_correction_term(params.eg_gamma, params.delta_so, params.e_p);
  result.g = 2.0 - (2.0 / 3.0) * (params.e_p * params.delta_so) /
                       (params.eg_gamma * (params.eg_gamma + params.delta_so));
  return result;
}

GFactorResult electron_g(const Composition& comp, const MaterialsDatabase& db) {
  return electron_g(alloy_params(comp, db));
}

double gap_to_wavelength(double eg_ev) {
  if (!(eg_ev > 0.0) || !std::isfinite(eg_ev))
    throw DomainError("gap must be positive to emit, got " + format_double(eg_ev) + " eV");
  return kEvMicrometre / eg_ev;
}

double wavelength_to_gap(double lambda_um) {
  if (!(lambda_um > 0.0) || !std::isfinite(lambda_um))
    throw DomainError("wavelength must be positive, got " + format_double(lambda_um) + " um");
  return kEvMicrometre / lambda_um;
}

}  // namespace gfactor
