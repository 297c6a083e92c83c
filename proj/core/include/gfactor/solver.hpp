#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfactor/alloy.hpp"
#include "gfactor/gfactor.hpp"
#include "gfactor/root_find.hpp"

namespace gfactor {

/// Residual bound on |g - target| for a refined crossing.
inline constexpr double kGResidualTolerance = 1e-9;
/// Bound on the path-parameter bracket of a refined crossing.
inline constexpr double kPathParameterTolerance = 1e-6;
/// Numerical lattice-match quality guaranteed along a matched path.
inline constexpr double kLatticeMatchRelTolerance = 1e-6;
/// Default scan resolution for feasibility searches.
inline constexpr int kDefaultGridResolution = 1001;

struct SweepRow {
  double t;
  Composition composition;
  GFactorResult result;
};

/// Rows at strictly increasing t; each row reproducible by evaluating its
/// composition against the same database.
struct SweepTable {
  std::string description;
  std::vector<SweepRow> rows;
};

/// Evaluates the path at t = i/(n-1) for i in [0, n). n >= 2. Evaluation
/// errors are rethrown annotated with the failing t.
SweepTable sweep_path(const CompositionPath& path, int n, const MaterialsDatabase& db);

/// Degenerate one-row table for a single composition (t = 0).
SweepTable single_point_table(const Composition& comp, const MaterialsDatabase& db);

struct GZeroResult {
  double t;
  Composition composition;
  GFactorResult result;
  RootResult root;
};

/// Finds t* in [t_lo, t_hi] with |g(t*) - g_target| <= 1e-9 by bracketed
/// refinement, with the final bracket at most 1e-6 wide. The endpoints must
/// straddle the target (SolverError otherwise); an endpoint sitting exactly
/// on the target is returned as-is. Any indirect-gap composition met during
/// the search aborts it: g is pinned at 2 there, so no crossing can exist.
GZeroResult find_g_zero(const CompositionPath& path, double t_lo, double t_hi,
                        const MaterialsDatabase& db, double g_target = 0.0);

/// An alloy family: which elements may occupy each sublattice. Element order
/// follows the name as written; the first cation's fraction is the free
/// variable x of a matched path.
struct FamilySpec {
  std::vector<Element> cations;
  std::vector<Element> anions;
  std::string name;

  bool is_quaternary() const noexcept { return cations.size() == 2 && anions.size() == 2; }
  bool is_ternary() const noexcept { return cations.size() + anions.size() == 3; }
};

/// Parses family names like "InGaAsP" or "GaInAs": bare element symbols, no
/// fractions, at most two per sublattice.
FamilySpec parse_family(std::string_view text);

/// Path through a quaternary family along which the lattice constant equals
/// substrate_a to relative accuracy 1e-6. t = 0 carries the largest
/// attainable first-cation fraction; the anion mix solves the Vegard
/// equation exactly at every x. truncated is set when part of the family's
/// composition square cannot match the substrate. Throws SolverError when no
/// composition can.
CompositionPath lattice_matched_path(const FamilySpec& family, double substrate_a,
                                     const MaterialsDatabase& db);

struct EgWindow {
  double min_ev = 0.0;
  double max_ev = 0.0;
};

struct DesignProblem {
  FamilySpec family;
  /// Substrate as given by the caller (compound name or explicit value), for
  /// reporting.
  std::string substrate_label;
  double substrate_a = 0.0;
  /// Physical growth tolerance on |a - substrate_a| / substrate_a.
  double lattice_tolerance = 1e-3;
  double g_target = 0.0;
  double g_tolerance = 0.0;
  EgWindow eg_window;
  int grid_resolution = kDefaultGridResolution;
};

enum class Feasibility { Feasible, Infeasible };
enum class SolutionOrigin { Crossing, GridPoint };

std::string_view feasibility_name(Feasibility status) noexcept;
std::string_view solution_origin_name(SolutionOrigin origin) noexcept;

struct DesignCandidate {
  double t;
  Composition composition;
  GFactorResult result;
  SolutionOrigin origin;
};

/// Record of how exhaustively the search covered the path; an Infeasible
/// outcome is only as strong as this certificate.
struct SearchCertificate {
  int grid_resolution = 0;
  double residual_tolerance = kGResidualTolerance;
  double t_tolerance = kPathParameterTolerance;
  int points_evaluated = 0;
  int direct_points = 0;
  int sign_changes = 0;
  int crossings_found = 0;
  int crossings_in_window = 0;
  /// Smallest |g - target| among in-window, lattice-matched direct points,
  /// when any exist.
  std::optional<double> best_g_distance_in_window;
  std::string note;
};

struct DesignSolution {
  Feasibility status = Feasibility::Infeasible;
  /// Every composition satisfying all constraints, crossings and qualifying
  /// grid points alike, ordered by |g - target|, then by distance of the
  /// gap from the window centre, then by t.
  std::vector<DesignCandidate> solutions;
  SearchCertificate certificate;
  std::string path_description;
  bool path_truncated = false;
};

/// Dense scan of the family's path (lattice-matched for a quaternary, the
/// full edge for a ternary), bracketed refinement of every sign change of
/// g - g_target, then constraint filtering. Infeasible iff no grid point or
/// refined crossing satisfies every constraint.
DesignSolution solve_design(const DesignProblem& problem, const MaterialsDatabase& db);

/// Substrate spec: a number is an explicit lattice constant in angstroms,
/// anything else a compound name resolved through the database.
double resolve_substrate(std::string_view spec, const MaterialsDatabase& db);

}  // namespace gfactor
