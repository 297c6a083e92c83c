#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfactor/elements.hpp"

namespace gfactor {

/// Fractional occupation of one element on its sublattice.
struct SiteFraction {
  Element element;
  double fraction;

  friend bool operator==(const SiteFraction&, const SiteFraction&) = default;
};

/// Tolerance on each sublattice's fraction sum. Inputs outside it are
/// rejected, never renormalized.
inline constexpr double kFractionSumTolerance = 1e-9;

/// A validated alloy composition: one or two group-III elements on the
/// cation sublattice, one or two group-V elements on the anion sublattice,
/// each sublattice summing to one. Instances are immutable.
class Composition {
public:
  /// Validates and canonicalizes (each sublattice sorted by element order).
  /// Throws DomainError when an invariant is violated.
  static Composition make(std::vector<SiteFraction> cations, std::vector<SiteFraction> anions);

  static Composition pure_binary(Element cation, Element anion);

  const std::vector<SiteFraction>& cations() const noexcept { return cations_; }
  const std::vector<SiteFraction>& anions() const noexcept { return anions_; }

  /// True when each sublattice holds a single element with fraction exactly 1.
  bool is_pure_binary() const noexcept;

  /// Canonical formula such as "Ga0.47In0.53As". Zero-fraction elements are
  /// omitted and a lone element with fraction exactly 1 carries no number.
  std::string formula() const;

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  Composition() = default;

  std::vector<SiteFraction> cations_;
  std::vector<SiteFraction> anions_;
};

/// Parses formulas like "InP", "Ga0.47In0.53As" or "In0.8Ga0.2As0.4P0.6".
/// A lone element on its sublattice may omit the fraction (meaning 1); when a
/// sublattice is mixed, both fractions must be explicit.
Composition parse_composition(std::string_view text);

}  // namespace gfactor
