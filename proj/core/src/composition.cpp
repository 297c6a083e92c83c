#include "gfactor/composition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"

namespace gfactor {
namespace {

const char* sublattice_label(Sublattice site) {
  return site == Sublattice::Cation ? "cation" : "anion";
}

const char* group_label(Sublattice site) {
  return site == Sublattice::Cation ? "group-III" : "group-V";
}

void validate_site(std::vector<SiteFraction>& entries, Sublattice site) {
  const char* label = sublattice_label(site);
  if (entries.empty())
    throw DomainError(std::string("composition has no ") + group_label(site) + " element");
  if (entries.size() > 2)
    throw DomainError(std::string("more than two elements on the ") + label + " sublattice");

  std::sort(entries.begin(), entries.end(),
            [](const SiteFraction& a, const SiteFraction& b) { return a.element < b.element; });
  if (entries.size() == 2 && entries[0].element == entries[1].element)
    throw DomainError(std::string("duplicate element ") + std::string(element_symbol(entries[0].element)));

  double sum = 0.0;
  for (const auto& sf : entries) {
    if (element_sublattice(sf.element) != site)
      throw DomainError(std::string(element_symbol(sf.element)) + " cannot occupy the " + label +
                        " sublattice");
    if (!(sf.fraction >= 0.0 && sf.fraction <= 1.0))
      throw DomainError(std::string(element_symbol(sf.element)) + " fraction " +
                        format_double(sf.fraction) + " is outside [0, 1]");
    sum += sf.fraction;
  }
  if (std::abs(sum - 1.0) > kFractionSumTolerance)
    throw DomainError(std::string(label) + " fractions sum to " + format_double(sum) +
                      ", expected 1");
}

}  // namespace

Composition Composition::make(std::vector<SiteFraction> cations, std::vector<SiteFraction> anions) {
  validate_site(cations, Sublattice::Cation);
  validate_site(anions, Sublattice::Anion);
  Composition comp;
  comp.cations_ = std::move(cations);
  comp.anions_ = std::move(anions);
  return comp;
}

Composition Composition::pure_binary(Element cation, Element anion) {
  return make({{cation, 1.0}}, {{anion, 1.0}});
}

bool Composition::is_pure_binary() const noexcept {
  auto lone = [](const std::vector<SiteFraction>& site) {
    int active = 0;
    bool unity = false;
    for (const auto& sf : site)
      if (sf.fraction > 0.0) {
        ++active;
        unity = sf.fraction == 1.0;
      }
    return active == 1 && unity;
  };
  return lone(cations_) && lone(anions_);
}

std::string Composition::formula() const {
  std::string out;
  auto emit = [&out](const std::vector<SiteFraction>& site) {
    int active = 0;
    for (const auto& sf : site)
      if (sf.fraction > 0.0) ++active;
    for (const auto& sf : site) {
      if (sf.fraction == 0.0) continue;
      out += element_symbol(sf.element);
      if (active > 1 || sf.fraction != 1.0) out += format_double(sf.fraction);
    }
  };
  emit(cations_);
  emit(anions_);
  return out;
}

Composition parse_composition(std::string_view text) {
  if (text.empty()) throw ParseError("empty composition formula");

  struct Token {
    Element element;
    std::optional<double> fraction;
  };
  std::vector<Token> tokens;

  std::size_t i = 0;
  while (i < text.size()) {
    const char head = text[i];
    if (!(head >= 'A' && head <= 'Z'))
      throw ParseError("unexpected character '" + std::string(1, head) + "' in formula '" +
                       std::string(text) + "'");
    const std::size_t start = i++;
    if (i < text.size() && text[i] >= 'a' && text[i] <= 'z') ++i;
    const std::string_view symbol = text.substr(start, i - start);
    const auto element = parse_element(symbol);
    if (!element)
      throw ParseError("unknown element symbol '" + std::string(symbol) + "' in formula '" +
                       std::string(text) + "'");

    std::optional<double> fraction;
    if (i < text.size() &&
        ((text[i] >= '0' && text[i] <= '9') || text[i] == '.' || text[i] == '-' || text[i] == '+')) {
      double value{};
      const auto res = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (res.ec != std::errc() || res.ptr == text.data() + i)
        throw ParseError("invalid fraction after " + std::string(symbol) + " in formula '" +
                         std::string(text) + "'");
      fraction = value;
      i = static_cast<std::size_t>(res.ptr - text.data());
    }
    tokens.push_back({*element, fraction});
  }

  std::vector<Token> cation_tokens;
  std::vector<Token> anion_tokens;
  for (const auto& tok : tokens)
    (element_sublattice(tok.element) == Sublattice::Cation ? cation_tokens : anion_tokens)
        .push_back(tok);

  auto resolve = [&text](std::vector<Token>& site) {
    std::vector<SiteFraction> out;
    for (auto& tok : site) {
      if (!tok.fraction) {
        if (site.size() > 1)
          throw ParseError(std::string(element_symbol(tok.element)) +
                           " needs an explicit fraction in the mixed formula '" + std::string(text) +
                           "'");
        tok.fraction = 1.0;
      }
      out.push_back({tok.element, *tok.fraction});
    }
    return out;
  };

  auto cations = resolve(cation_tokens);
  auto anions = resolve(anion_tokens);
  try {
    return Composition::make(std::move(cations), std::move(anions));
  } catch (const DomainError& err) {
    throw ParseError("invalid composition '" + std::string(text) + "': " + err.what());
  }
}

}  // namespace gfactor
