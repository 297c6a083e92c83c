#pragma once

#include <functional>
#include <string>

#include "gfactor/composition.hpp"
#include "gfactor/database.hpp"

namespace gfactor {

/// Band-structure inputs at one composition. Energies in eV, lattice
/// constant in angstroms.
struct AlloyParams {
  double a = 0.0;
  double eg_gamma = 0.0;
  double eg_x = 0.0;
  double eg_l = 0.0;
  double delta_so = 0.0;
  double e_p = 0.0;

  /// Smallest of the three conduction-band edges.
  double min_gap() const noexcept;

  bool operator==(const AlloyParams&) const = default;
};

/// Composition-weighted lattice constant. Linear in every site fraction;
/// lattice constants never bow.
double lattice_constant(const Composition& comp, const MaterialsDatabase& db);

/// One scalar parameter at `comp`: bilinear mix of the corner binaries minus
/// the bowing term of every ternary edge with both endpoints active.
/// LatticeConstant is rejected here; use lattice_constant().
double interpolate_param(const Composition& comp, ParamKey key, const MaterialsDatabase& db);

/// Full parameter set at `comp`.
AlloyParams alloy_params(const Composition& comp, const MaterialsDatabase& db);

/// A one-parameter family of compositions, t in [0, 1].
struct CompositionPath {
  std::function<Composition(double)> at;
  std::string description;
  /// True when the requested family had to be cut down to the part that
  /// exists physically (fractions in [0, 1]).
  bool truncated = false;
};

/// Straight-line path between two compositions sharing a merged site basis.
/// at(0) == a, at(1) == b; fractions interpolate linearly.
CompositionPath edge_path(const Composition& a, const Composition& b);

}  // namespace gfactor
