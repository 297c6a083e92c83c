#include "gfactor/alloy.hpp"

#include <algorithm>
#include <map>

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"

namespace gfactor {

double AlloyParams::min_gap() const noexcept { return std::min({eg_gamma, eg_x, eg_l}); }

namespace {

/// Entries that actually contribute; keeps pure-binary corners from pulling
/// in records for elements with zero weight.
std::vector<SiteFraction> active_entries(const std::vector<SiteFraction>& site) {
  std::vector<SiteFraction> out;
  out.reserve(site.size());
  for (const auto& sf : site)
    if (sf.fraction > 0.0) out.push_back(sf);
  return out;
}

}  // namespace

double lattice_constant(const Composition& comp, const MaterialsDatabase& db) {
  double a = 0.0;
  for (const auto& cat : active_entries(comp.cations()))
    for (const auto& an : active_entries(comp.anions()))
      a += cat.fraction * an.fraction * db.binary(cat.element, an.element).a;
  return a;
}

double interpolate_param(const Composition& comp, ParamKey key, const MaterialsDatabase& db) {
  if (key == ParamKey::LatticeConstant)
    throw DomainError("lattice constants mix linearly; use lattice_constant()");

  const auto cats = active_entries(comp.cations());
  const auto ans = active_entries(comp.anions());

  double value = 0.0;
  for (const auto& cat : cats)
    for (const auto& an : ans)
      value += cat.fraction * an.fraction * db.binary(cat.element, an.element).value(key);

  // Mixed-cation edges, one per shared anion, weighted by that anion's
  // fraction.
  if (cats.size() == 2) {
    const double w = cats[0].fraction * cats[1].fraction;
    for (const auto& an : ans) {
      const auto& left = db.binary(cats[0].element, an.element);
      const auto& right = db.binary(cats[1].element, an.element);
      value -= an.fraction * w * db.bowing(left.name, right.name, key);
    }
  }
  // Mixed-anion edges, one per shared cation.
  if (ans.size() == 2) {
    const double w = ans[0].fraction * ans[1].fraction;
    for (const auto& cat : cats) {
      const auto& left = db.binary(cat.element, ans[0].element);
      const auto& right = db.binary(cat.element, ans[1].element);
      value -= cat.fraction * w * db.bowing(left.name, right.name, key);
    }
  }
  return value;
}

AlloyParams alloy_params(const Composition& comp, const MaterialsDatabase& db) {
  AlloyParams p;
  p.a = lattice_constant(comp, db);
  p.eg_gamma = interpolate_param(comp, ParamKey::EgGamma, db);
  p.eg_x = interpolate_param(comp, ParamKey::EgX, db);
  p.eg_l = interpolate_param(comp, ParamKey::EgL, db);
  p.delta_so = interpolate_param(comp, ParamKey::DeltaSo, db);
  p.e_p = interpolate_param(comp, ParamKey::Ep, db);
  return p;
}

namespace {

struct MergedEntry {
  Element element;
  double from;
  double to;
};

std::vector<MergedEntry> merge_site(const std::vector<SiteFraction>& from,
                                    const std::vector<SiteFraction>& to) {
  std::map<Element, MergedEntry> merged;
  for (const auto& sf : from)
    merged.emplace(sf.element, MergedEntry{sf.element, sf.fraction, 0.0});
  for (const auto& sf : to) {
    auto [it, inserted] = merged.emplace(sf.element, MergedEntry{sf.element, 0.0, sf.fraction});
    if (!inserted) it->second.to = sf.fraction;
  }
  std::vector<MergedEntry> out;
  out.reserve(merged.size());
  for (const auto& [element, entry] : merged) out.push_back(entry);
  return out;
}

}  // namespace

CompositionPath edge_path(const Composition& from, const Composition& to) {
  const auto cats = merge_site(from.cations(), to.cations());
  const auto ans = merge_site(from.anions(), to.anions());

  CompositionPath path;
  path.description = from.formula() + ".." + to.formula();
  path.truncated = false;
  path.at = [cats, ans](double t) {
    if (!(t >= 0.0 && t <= 1.0))
      throw DomainError("path parameter t = " + format_double(t) + " is outside [0, 1]");
    auto mix = [t](const std::vector<MergedEntry>& site) {
      std::vector<SiteFraction> out;
      out.reserve(site.size());
      for (const auto& entry : site)
        out.push_back({entry.element, (1.0 - t) * entry.from + t * entry.to});
      return out;
    };
    return Composition::make(mix(cats), mix(ans));
  };
  return path;
}

}  // namespace gfactor
