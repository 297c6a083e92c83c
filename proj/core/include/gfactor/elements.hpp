#pragma once

#include <optional>
#include <string_view>

namespace gfactor {

/// Elements that can occupy the two zinc-blende sublattices. The declaration
/// order is the canonical ordering used when compositions are normalized and
/// printed.
enum class Element { B, Al, Ga, In, Tl, N, P, As, Sb, Bi };

/// Which sublattice an element occupies: group III on the cation site,
/// group V on the anion site.
enum class Sublattice { Cation, Anion };

std::string_view element_symbol(Element e) noexcept;
Sublattice element_sublattice(Element e) noexcept;
std::optional<Element> parse_element(std::string_view symbol) noexcept;

}  // namespace gfactor
