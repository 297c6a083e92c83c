#include "gfactor/elements.hpp"

#include <array>
#include <cstddef>

namespace gfactor {
namespace {

struct ElementInfo {
  Element element;
  std::string_view symbol;
  Sublattice site;
};

constexpr std::array<ElementInfo, 10> kElements{{
    {Element::B, "B", Sublattice::Cation},
    {Element::Al, "Al", Sublattice::Cation},
    {Element::Ga, "Ga", Sublattice::Cation},
    {Element::In, "In", Sublattice::Cation},
    {Element::Tl, "Tl", Sublattice::Cation},
    {Element::N, "N", Sublattice::Anion},
    {Element::P, "P", Sublattice::Anion},
    {Element::As, "As", Sublattice::Anion},
    {Element::Sb, "Sb", Sublattice::Anion},
    {Element::Bi, "Bi", Sublattice::Anion},
}};

}  // namespace

std::string_view element_symbol(Element e) noexcept {
  return kElements[static_cast<std::size_t>(e)].symbol;
}

Sublattice element_sublattice(Element e) noexcept {
  return kElements[static_cast<std::size_t>(e)].site;
}

std::optional<Element> parse_element(std::string_view symbol) noexcept {
  for (const auto& info : kElements)
    if (info.symbol == symbol) return info.element;
  return std::nullopt;
}

}  // namespace gfactor
