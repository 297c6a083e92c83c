#include "gfactor/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"

namespace gfactor {

namespace {

/// Snap width for the solved anion fraction: an endpoint that lands within
/// an ulp-scale distance of a pure sublattice is meant to be pure.
constexpr double kAnionSnapTolerance = 1e-12;

}  // namespace

std::string_view feasibility_name(Feasibility status) noexcept {
  return status == Feasibility::Feasible ? "Feasible" : "Infeasible";
}

std::string_view solution_origin_name(SolutionOrigin origin) noexcept {
  return origin == SolutionOrigin::Crossing ? "crossing" : "grid-point";
}

SweepTable sweep_path(const CompositionPath& path, int n, const MaterialsDatabase& db) {
  if (!path.at) throw DomainError("path has no parameterization");
  if (n < 2) throw DomainError("a sweep needs at least 2 points, got " + std::to_string(n));

  SweepTable table;
  table.description = path.description;
  table.rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    try {
      Composition comp = path.at(t);
      GFactorResult result = electron_g(comp, db);
      table.rows.push_back(SweepRow{t, std::move(comp), std::move(result)});
    } catch (const Error& err) {
      throw SolverError("sweep failed at t = " + format_double(t) + ": " + err.what());
    }
  }
  return table;
}

SweepTable single_point_table(const Composition& comp, const MaterialsDatabase& db) {
  SweepTable table;
  table.description = comp.formula();
  table.rows.push_back(SweepRow{0.0, comp, electron_g(comp, db)});
  return table;
}

GZeroResult find_g_zero(const CompositionPath& path, double t_lo, double t_hi,
                        const MaterialsDatabase& db, double g_target) {
  if (!path.at) throw DomainError("path has no parameterization");
  if (!(t_lo < t_hi))
    throw DomainError("bracket [" + format_double(t_lo) + ", " + format_double(t_hi) +
                      "] is empty");
  if (!std::isfinite(g_target)) throw DomainError("target g must be finite");

  const auto objective = [&](double t) {
    const GFactorResult r = electron_g(path.at(t), db);
    if (r.character == GapCharacter::Indirect)
      throw SolverError("composition at t = " + format_double(t) +
                        " has an indirect gap, where g is pinned at 2; no crossing can "
                        "exist there");
    return r.g - g_target;
  };

  const RootResult root =
      find_root_bracketed(objective, t_lo, t_hi, kPathParameterTolerance, kGResidualTolerance);
  if (!root.converged)
    throw SolverError("crossing refinement stalled at t = " + format_double(root.x) +
                      " with |g - target| = " + format_double(std::abs(root.f)));

  Composition comp = path.at(root.x);
  GFactorResult result = electron_g(comp, db);
  return GZeroResult{root.x, std::move(comp), std::move(result), root};
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  spec.name = std::string(text);
  if (text.empty()) throw ParseError("empty alloy family");

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c < 'A' || c > 'Z')
      throw ParseError("alloy family '" + spec.name + "': unexpected character '" +
                       std::string(1, c) + "'; expected bare element symbols like \"InGaAsP\"");
    std::string symbol(1, c);
    ++i;
    if (i < text.size() && text[i] >= 'a' && text[i] <= 'z') {
      symbol += text[i];
      ++i;
    }
    const auto element = parse_element(symbol);
    if (!element)
      throw ParseError("alloy family '" + spec.name + "': unknown element '" + symbol + "'");
    auto& side =
        element_sublattice(*element) == Sublattice::Cation ? spec.cations : spec.anions;
    if (std::find(side.begin(), side.end(), *element) != side.end())
      throw ParseError("alloy family '" + spec.name + "': element '" + symbol + "' repeats");
    if (side.size() == 2)
      throw ParseError("alloy family '" + spec.name +
                       "': more than two elements on one sublattice");
    side.push_back(*element);
  }
  if (spec.cations.empty() || spec.anions.empty())
    throw ParseError("alloy family '" + spec.name +
                     "': needs at least one cation and one anion");
  return spec;
}

CompositionPath lattice_matched_path(const FamilySpec& family, double substrate_a,
                                     const MaterialsDatabase& db) {
  if (!family.is_quaternary())
    throw DomainError("family '" + family.name +
                      "' cannot trace a matched line: two cations and two anions are needed "
                      "(a ternary meets a given lattice constant at isolated points)");
  if (!(substrate_a > 0.0) || !std::isfinite(substrate_a))
    throw DomainError("substrate lattice constant must be positive, got " +
                      format_double(substrate_a));

  const Element ca = family.cations[0];
  const Element cb = family.cations[1];
  const Element an_first = family.anions[0];   // fraction y
  const Element an_second = family.anions[1];  // fraction 1 - y

  const double a_ca_first = db.binary(ca, an_first).a;
  const double a_cb_first = db.binary(cb, an_first).a;
  const double a_ca_second = db.binary(ca, an_second).a;
  const double a_cb_second = db.binary(cb, an_second).a;

  // Lattice mismatch of the two pure-anion rows, each affine in the
  // first-cation fraction x. A matching y exists exactly where the rows
  // straddle the substrate: f0(x) * f1(x) <= 0.
  const double f0_0 = a_cb_second - substrate_a;
  const double f0_1 = a_ca_second - substrate_a;
  const double f1_0 = a_cb_first - substrate_a;
  const double f1_1 = a_ca_first - substrate_a;
  const auto f0_at = [=](double x) { return x * f0_1 + (1.0 - x) * f0_0; };
  const auto f1_at = [=](double x) { return x * f1_1 + (1.0 - x) * f1_0; };

  std::vector<double> cuts{0.0, 1.0};
  const auto add_root = [&cuts](double v0, double v1) {
    if (v0 == v1) return;
    const double r = v0 / (v0 - v1);
    if (r > 0.0 && r < 1.0) cuts.push_back(r);
  };
  add_root(f0_0, f0_1);
  add_root(f1_0, f1_1);
  std::sort(cuts.begin(), cuts.end());

  std::optional<double> x_lo;
  std::optional<double> x_hi;
  bool disconnected = false;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    if (f0_at(mid) * f1_at(mid) <= 0.0) {
      if (!x_lo) {
        x_lo = cuts[i];
        x_hi = cuts[i + 1];
      } else if (*x_hi == cuts[i]) {
        x_hi = cuts[i + 1];
      } else {
        disconnected = true;
      }
    }
  }
  if (!x_lo) {
    // No segment qualifies, but the substrate can still touch the family at
    // an isolated x (a corner binary or an edge crossing).
    for (const double c : cuts) {
      if (f0_at(c) * f1_at(c) <= 0.0) {
        x_lo = c;
        x_hi = c;
        break;
      }
    }
  }
  if (!x_lo)
    throw SolverError("substrate a = " + format_double(substrate_a) +
                      " is not attainable anywhere in family '" + family.name + "'");
  if (disconnected)
    throw SolverError("matched set for family '" + family.name +
                      "' is disconnected; refusing to pick a branch");

  const double lo = *x_lo;
  const double hi = *x_hi;
  const bool fixed_point = lo == hi;

  CompositionPath path;
  path.truncated = lo > 0.0 || hi < 1.0;
  path.at = [=](double t) -> Composition {
    if (!(t >= 0.0 && t <= 1.0))
      throw DomainError("path parameter t = " + format_double(t) + " is outside [0, 1]");
    double x = fixed_point ? lo : (1.0 - t) * hi + t * lo;
    x = std::min(1.0, std::max(0.0, x));

    const double v0 = x * a_ca_second + (1.0 - x) * a_cb_second - substrate_a;
    const double v1 = x * a_ca_first + (1.0 - x) * a_cb_first - substrate_a;
    double y;
    if (v0 == v1) {
      if (v0 != 0.0)
        throw SolverError("no anion mix matches a = " + format_double(substrate_a) +
                          " at t = " + format_double(t));
      y = 0.5;  // both rows sit on the substrate; any mix matches
    } else {
      y = v0 / (v0 - v1);
    }
    if (std::abs(y) <= kAnionSnapTolerance) {
      y = 0.0;
    } else if (std::abs(y - 1.0) <= kAnionSnapTolerance) {
      y = 1.0;
    } else if (y < 0.0 || y > 1.0) {
      if (y < -1e-9 || y > 1.0 + 1e-9)
        throw SolverError("matched anion fraction escaped [0, 1] at t = " + format_double(t));
      y = std::min(1.0, std::max(0.0, y));
    }
    return Composition::make({{ca, x}, {cb, 1.0 - x}}, {{an_first, y}, {an_second, 1.0 - y}});
  };
  path.description = family.name + " matched to a = " + format_double(substrate_a) + ": " +
                     path.at(0.0).formula() + ".." + path.at(1.0).formula();
  return path;
}

namespace {

CompositionPath family_search_path(const DesignProblem& problem, const MaterialsDatabase& db) {
  const FamilySpec& family = problem.family;
  if (family.is_quaternary())
    return lattice_matched_path(family, problem.substrate_a, db);
  if (family.is_ternary()) {
    // One degree of freedom: the full edge, filtered by the problem's
    // physical lattice tolerance during candidate selection.
    if (family.cations.size() == 2)
      return edge_path(Composition::pure_binary(family.cations[0], family.anions[0]),
                       Composition::pure_binary(family.cations[1], family.anions[0]));
    return edge_path(Composition::pure_binary(family.cations[0], family.anions[0]),
                     Composition::pure_binary(family.cations[0], family.anions[1]));
  }
  throw DomainError("family '" + family.name + "' has no compositional freedom to search");
}

void validate_problem(const DesignProblem& problem) {
  if (!(problem.substrate_a > 0.0) || !std::isfinite(problem.substrate_a))
    throw DomainError("substrate lattice constant must be positive, got " +
                      format_double(problem.substrate_a));
  if (!(problem.lattice_tolerance > 0.0) || !std::isfinite(problem.lattice_tolerance))
    throw DomainError("lattice tolerance must be positive, got " +
                      format_double(problem.lattice_tolerance));
  if (!(problem.g_tolerance > 0.0) || !std::isfinite(problem.g_tolerance))
    throw DomainError("g tolerance must be positive, got " +
                      format_double(problem.g_tolerance));
  if (!std::isfinite(problem.g_target))
    throw DomainError("target g must be finite, got " + format_double(problem.g_target));
  if (!std::isfinite(problem.eg_window.min_ev) || !std::isfinite(problem.eg_window.max_ev) ||
      !(problem.eg_window.min_ev < problem.eg_window.max_ev))
    throw DomainError("gap window [" + format_double(problem.eg_window.min_ev) + ", " +
                      format_double(problem.eg_window.max_ev) +
                      "] is malformed: the minimum must lie below the maximum");
  if (problem.grid_resolution < 2)
    throw DomainError("grid resolution must be at least 2, got " +
                      std::to_string(problem.grid_resolution));
}

}  // namespace

DesignSolution solve_design(const DesignProblem& problem, const MaterialsDatabase& db) {
  validate_problem(problem);

  const CompositionPath path = family_search_path(problem, db);
  const SweepTable table = sweep_path(path, problem.grid_resolution, db);

  DesignSolution out;
  out.path_description = path.description;
  out.path_truncated = path.truncated;
  out.certificate.grid_resolution = problem.grid_resolution;
  out.certificate.residual_tolerance = kGResidualTolerance;
  out.certificate.t_tolerance = kPathParameterTolerance;
  out.certificate.points_evaluated = static_cast<int>(table.rows.size());

  const auto lattice_ok = [&](const AlloyParams& params) {
    return std::abs(params.a - problem.substrate_a) / problem.substrate_a <=
           problem.lattice_tolerance;
  };
  const auto in_window = [&](const AlloyParams& params) {
    return params.eg_gamma >= problem.eg_window.min_ev &&
           params.eg_gamma <= problem.eg_window.max_ev;
  };
  const auto meets_all = [&](const GFactorResult& r) {
    return r.character == GapCharacter::Direct &&
           std::abs(r.g - problem.g_target) <= problem.g_tolerance &&
           in_window(r.params_used) && lattice_ok(r.params_used);
  };
  const double window_centre = 0.5 * (problem.eg_window.min_ev + problem.eg_window.max_ev);

  auto& cert = out.certificate;
  std::optional<double> best;
  const auto offer_best = [&](const GFactorResult& r) {
    if (!in_window(r.params_used) || !lattice_ok(r.params_used)) return;
    const double distance = std::abs(r.g - problem.g_target);
    if (!best || distance < *best) best = distance;
  };

  // Grid pass: direct counting, exact hits, qualifying grid points.
  std::set<std::size_t> exact_rows;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& row = table.rows[i];
    if (row.result.character != GapCharacter::Direct) continue;
    ++cert.direct_points;
    offer_best(row.result);
    if (row.result.g - problem.g_target == 0.0) {
      // The scan landed on the crossing itself; no bracket to refine.
      exact_rows.insert(i);
      ++cert.crossings_found;
      if (in_window(row.result.params_used)) ++cert.crossings_in_window;
      if (meets_all(row.result))
        out.solutions.push_back(
            DesignCandidate{row.t, row.composition, row.result, SolutionOrigin::Crossing});
    }
  }

  // Refinement pass over strict sign changes of g - target.
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const SweepRow& lo = table.rows[i];
    const SweepRow& hi = table.rows[i + 1];
    if (lo.result.character != GapCharacter::Direct ||
        hi.result.character != GapCharacter::Direct)
      continue;
    const double r_lo = lo.result.g - problem.g_target;
    const double r_hi = hi.result.g - problem.g_target;
    if (!(r_lo * r_hi < 0.0)) continue;
    ++cert.sign_changes;
    try {
      const GZeroResult zero = find_g_zero(path, lo.t, hi.t, db, problem.g_target);
      ++cert.crossings_found;
      offer_best(zero.result);
      if (in_window(zero.result.params_used)) ++cert.crossings_in_window;
      if (meets_all(zero.result))
        out.solutions.push_back(
            DesignCandidate{zero.t, zero.composition, zero.result, SolutionOrigin::Crossing});
    } catch (const SolverError& err) {
      cert.note += std::string(cert.note.empty() ? "" : "; ") + "bracket [" +
                   format_double(lo.t) + ", " + format_double(hi.t) +
                   "] failed to refine: " + err.what();
    }
  }

  // Grid points that satisfy every constraint on their own.
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (exact_rows.count(i)) continue;
    const SweepRow& row = table.rows[i];
    if (meets_all(row.result))
      out.solutions.push_back(
          DesignCandidate{row.t, row.composition, row.result, SolutionOrigin::GridPoint});
  }

  cert.best_g_distance_in_window = best;
  const std::string summary =
      "scanned " + std::to_string(cert.points_evaluated) + " points (" +
      std::to_string(cert.direct_points) + " direct) along " + out.path_description + "; " +
      std::to_string(cert.sign_changes) + " sign changes, " +
      std::to_string(cert.crossings_found) + " crossings (" +
      std::to_string(cert.crossings_in_window) + " in the gap window)";
  cert.note = cert.note.empty() ? summary : summary + "; " + cert.note;

  std::sort(out.solutions.begin(), out.solutions.end(),
            [&](const DesignCandidate& a, const DesignCandidate& b) {
              const double ga = std::abs(a.result.g - problem.g_target);
              const double gb = std::abs(b.result.g - problem.g_target);
              if (ga != gb) return ga < gb;
              const double ea = std::abs(a.result.params_used.eg_gamma - window_centre);
              const double eb = std::abs(b.result.params_used.eg_gamma - window_centre);
              if (ea != eb) return ea < eb;
              return a.t < b.t;
            });

  out.status = out.solutions.empty() ? Feasibility::Infeasible : Feasibility::Feasible;
  return out;
}

double resolve_substrate(std::string_view spec, const MaterialsDatabase& db) {
  try {
    const double a = parse_double(spec);
    if (!(a > 0.0) || !std::isfinite(a))
      throw DomainError("substrate lattice constant must be positive, got " +
                        std::string(spec));
    return a;
  } catch (const ParseError&) {
    return db.get_binary(spec).a;
  }
}

}  // namespace gfactor
