#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfactor/database.hpp"
#include "gfactor/gfactor.hpp"
#include "gfactor/numeric_text.hpp"
#include "gfactor/solver.hpp"
#include "gfactor/table_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gfactor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

constexpr std::string_view kExperimentalHeader = "name,a_angstrom,g_or_eg,source";

struct CommonOpts {
  std::string db_path;
  bool json_out = false;
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--db", opts.db_path, "Parameter database file (default: shipped file)");
  cmd->add_flag("--json", opts.json_out, "Emit structured JSON instead of text/CSV");
  cmd->add_flag("--verbose", opts.verbose, "Report the resolved database path on stderr");
}

fs::path executable_dir() {
  std::error_code ec;
  const fs::path self = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) return self.parent_path();
  return fs::current_path();
}

fs::path default_db_path() {
  const fs::path dir = executable_dir();
  const fs::path adjacent = dir / "data" / "iii_v_lowt.params";
  if (fs::exists(adjacent)) return adjacent;
  const fs::path installed = dir.parent_path() / "share" / "gfactor" / "iii_v_lowt.params";
  if (fs::exists(installed)) return installed;
  return adjacent;  // let the load fail with a concrete path in the message
}

MaterialsDatabase open_database(const CommonOpts& opts) {
  const fs::path path = opts.db_path.empty() ? default_db_path() : fs::path(opts.db_path);
  if (opts.verbose) std::cerr << "database: " << path.string() << "\n";
  return load_database_file(path);
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + out_file + "'");
  out << text;
}

json row_to_json(const SweepCsvRow& row) {
  return json{{"t", row.t},
              {"composition", row.composition},
              {"a_angstrom", row.a_angstrom},
              {"eg_gamma_ev", row.eg_gamma_ev},
              {"eg_min_ev", row.eg_min_ev},
              {"character", row.character},
              {"g", row.g}};
}

json table_to_json(const SweepTable& table) {
  json rows = json::array();
  for (const SweepRow& row : table.rows) rows.push_back(row_to_json(project_row(row)));
  return json{{"description", table.description}, {"rows", std::move(rows)}};
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const CommonOpts& opts, const std::string& formula) {
  const MaterialsDatabase db = open_database(opts);
  const Composition comp = parse_composition(formula);
  const GFactorResult result = electron_g(comp, db);
  const AlloyParams& p = result.params_used;
  const double lambda = gap_to_wavelength(p.eg_gamma);

  if (opts.json_out) {
    const json out{{"composition", comp.formula()},
                   {"character", std::string(gap_character_name(result.character))},
                   {"g", result.g},
                   {"roth_correction", result.roth_correction},
                   {"a_angstrom", p.a},
                   {"eg_gamma_ev", p.eg_gamma},
                   {"eg_x_ev", p.eg_x},
                   {"eg_l_ev", p.eg_l},
                   {"eg_min_ev", p.min_gap()},
                   {"delta_so_ev", p.delta_so},
                   {"e_p_ev", p.e_p},
                   {"lambda_um", lambda}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "composition: " << comp.formula() << "\n"
            << "character: " << gap_character_name(result.character) << "\n"
            << "g: " << format_double(result.g) << "\n"
            << "roth_correction: " << format_double(result.roth_correction) << "\n"
            << "a_angstrom: " << format_double(p.a) << "\n"
            << "eg_gamma_ev: " << format_double(p.eg_gamma) << "\n"
            << "eg_x_ev: " << format_double(p.eg_x) << "\n"
            << "eg_l_ev: " << format_double(p.eg_l) << "\n"
            << "eg_min_ev: " << format_double(p.min_gap()) << "\n"
            << "delta_so_ev: " << format_double(p.delta_so) << "\n"
            << "e_p_ev: " << format_double(p.e_p) << "\n"
            << "lambda_um: " << format_double(lambda) << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- sweep ----

CompositionPath edge_from_spec(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos || dots == 0 || dots + 2 >= spec.size())
    throw ParseError("path spec must be 'A..B' with two composition formulas, got '" + spec +
                     "'");
  return edge_path(parse_composition(spec.substr(0, dots)),
                   parse_composition(spec.substr(dots + 2)));
}

int cmd_sweep(const CommonOpts& opts, const std::string& spec, const std::string& family,
              const std::string& substrate, int n, const std::string& out_file) {
  const MaterialsDatabase db = open_database(opts);

  if (spec.empty() == family.empty())
    throw Error("pass exactly one of a positional 'A..B' path or --family");

  const CompositionPath path = [&] {
    if (!family.empty())
      return lattice_matched_path(parse_family(family), resolve_substrate(substrate, db), db);
    return edge_from_spec(spec);
  }();

  const SweepTable table = sweep_path(path, n, db);
  write_output(opts.json_out ? table_to_json(table).dump(2) + "\n" : to_csv(table), out_file);
  return kExitOk;
}

// --------------------------------------------------------------- solve ----

EgWindow parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
    throw ParseError("gap window must be 'min:max' in eV, got '" + text + "'");
  EgWindow window;
  window.min_ev = parse_double(text.substr(0, colon));
  window.max_ev = parse_double(text.substr(colon + 1));
  return window;
}

json candidate_to_json(const DesignCandidate& cand) {
  const AlloyParams& p = cand.result.params_used;
  return json{{"t", cand.t},
              {"composition", cand.composition.formula()},
              {"origin", std::string(solution_origin_name(cand.origin))},
              {"g", cand.result.g},
              {"character", std::string(gap_character_name(cand.result.character))},
              {"a_angstrom", p.a},
              {"eg_gamma_ev", p.eg_gamma},
              {"eg_min_ev", p.min_gap()},
              {"delta_so_ev", p.delta_so},
              {"e_p_ev", p.e_p}};
}

int cmd_solve(const CommonOpts& opts, const std::string& family, const std::string& substrate,
              double g_target, double g_tol, const std::string& window_text, double lattice_tol,
              int grid) {
  const MaterialsDatabase db = open_database(opts);

  DesignProblem problem;
  problem.family = parse_family(family);
  problem.substrate_label = substrate;
  problem.substrate_a = resolve_substrate(substrate, db);
  problem.lattice_tolerance = lattice_tol;
  problem.g_target = g_target;
  problem.g_tolerance = g_tol;
  problem.eg_window = parse_window(window_text);
  problem.grid_resolution = grid;

  const DesignSolution solution = solve_design(problem, db);
  const SearchCertificate& cert = solution.certificate;

  if (opts.json_out) {
    json solutions = json::array();
    for (const DesignCandidate& cand : solution.solutions)
      solutions.push_back(candidate_to_json(cand));
    json certificate{{"grid_resolution", cert.grid_resolution},
                     {"residual_tolerance", cert.residual_tolerance},
                     {"t_tolerance", cert.t_tolerance},
                     {"points_evaluated", cert.points_evaluated},
                     {"direct_points", cert.direct_points},
                     {"sign_changes", cert.sign_changes},
                     {"crossings_found", cert.crossings_found},
                     {"crossings_in_window", cert.crossings_in_window},
                     {"note", cert.note}};
    certificate["best_g_distance_in_window"] =
        cert.best_g_distance_in_window ? json(*cert.best_g_distance_in_window) : json(nullptr);
    const json out{{"status", std::string(feasibility_name(solution.status))},
                   {"path", solution.path_description},
                   {"path_truncated", solution.path_truncated},
                   {"substrate",
                    json{{"label", problem.substrate_label}, {"a_angstrom", problem.substrate_a}}},
                   {"solutions", std::move(solutions)},
                   {"certificate", std::move(certificate)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "status: " << feasibility_name(solution.status) << "\n"
              << "substrate: " << problem.substrate_label
              << " (a = " << format_double(problem.substrate_a) << ")\n"
              << "path: " << solution.path_description << "\n"
              << "path_truncated: " << (solution.path_truncated ? "true" : "false") << "\n"
              << "solutions: " << solution.solutions.size() << "\n";
    for (const DesignCandidate& cand : solution.solutions) {
      const AlloyParams& p = cand.result.params_used;
      std::cout << "  t=" << format_double(cand.t) << " composition=" << cand.composition.formula()
                << " g=" << format_double(cand.result.g)
                << " eg_gamma_ev=" << format_double(p.eg_gamma)
                << " a_angstrom=" << format_double(p.a) << " origin="
                << solution_origin_name(cand.origin) << "\n";
    }
    std::cout << "certificate: " << cert.note << "\n"
              << "  grid_resolution: " << cert.grid_resolution << "\n"
              << "  residual_tolerance: " << format_double(cert.residual_tolerance) << "\n"
              << "  t_tolerance: " << format_double(cert.t_tolerance) << "\n"
              << "  best_g_distance_in_window: "
              << (cert.best_g_distance_in_window
                      ? format_double(*cert.best_g_distance_in_window)
                      : std::string("none"))
              << "\n";
  }
  return solution.status == Feasibility::Feasible ? kExitOk : kExitInfeasible;
}

// -------------------------------------------------------------- figure ----

struct FigurePathSpec {
  std::string spec;
  std::string file_stem;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) items.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::string file_stem_for(const std::string& spec) {
  std::string stem = spec;
  const auto dots = stem.find("..");
  if (dots != std::string::npos) stem.replace(dots, 2, "-");
  return stem;
}

const std::vector<std::string>& default_figure_paths() {
  // The material set of the reproduced chart: the direct binaries' edges,
  // the InP point, and the indirect GaP/AlAs/AlSb chain.
  static const std::vector<std::string> paths{
      "InP",        "GaAs..InAs", "InAs..InSb", "GaSb..InSb",
      "GaAs..GaSb", "GaP..AlAs",  "AlAs..AlSb",
  };
  return paths;
}

int cmd_figure(const CommonOpts& opts, const std::string& panel, const std::string& paths_arg,
               int n, const std::string& out_dir, const std::string& experimental) {
  const MaterialsDatabase db = open_database(opts);

  const std::vector<std::string> specs =
      paths_arg == "default" ? default_figure_paths() : split_list(paths_arg);
  if (specs.empty()) throw Error("no paths given");

  fs::create_directories(out_dir);
  const std::string y_column = panel == "A" ? "g" : "eg_min_ev";

  json manifest{{"panel", panel}, {"y_column", y_column}, {"out_dir", out_dir}};
  json files = json::array();

  for (const std::string& spec : specs) {
    const SweepTable table =
        spec.find("..") == std::string::npos
            ? single_point_table(parse_composition(spec), db)
            : sweep_path(edge_from_spec(spec), n, db);
    const std::string file_name = file_stem_for(spec) + ".csv";
    const fs::path target = fs::path(out_dir) / file_name;
    std::ofstream out(target, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + target.string() + "'");
    out << to_csv(table);
    files.push_back(json{{"path_spec", spec},
                         {"file", file_name},
                         {"rows", table.rows.size()},
                         {"description", table.description}});
    if (!opts.json_out)
      std::cout << "wrote " << file_name << ": " << table.rows.size() << " rows ("
                << table.description << ")\n";
  }

  json experimental_entry(nullptr);
  if (!experimental.empty()) {
    std::ifstream in(experimental, std::ios::binary);
    if (!in) throw Error("cannot open experimental-points file '" + experimental + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    std::string_view first_line(content);
    if (const auto nl = first_line.find('\n'); nl != std::string_view::npos)
      first_line = first_line.substr(0, nl);
    if (!first_line.empty() && first_line.back() == '\r') first_line.remove_suffix(1);
    if (first_line != kExperimentalHeader)
      throw ParseError("experimental-points file must start with header '" +
                       std::string(kExperimentalHeader) + "', got '" + std::string(first_line) +
                       "'");
    const fs::path target = fs::path(out_dir) / "experimental_points.csv";
    std::ofstream out(target, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + target.string() + "'");
    out << content;  // verbatim; measured data is never reformatted
    experimental_entry = "experimental_points.csv";
    if (!opts.json_out)
      std::cout << "wrote experimental_points.csv (copied verbatim)\n";
  }

  if (opts.json_out) {
    manifest["files"] = std::move(files);
    manifest["experimental"] = std::move(experimental_entry);
    std::cout << manifest.dump(2) << "\n";
  } else {
    std::cout << "panel " << panel << " y-column: " << y_column << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conduction-electron g-factor engineering for III-V alloys"};
  app.require_subcommand(1);

  // eval
  CommonOpts eval_opts;
  std::string eval_formula;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one composition");
  eval_cmd->add_option("formula", eval_formula, "Composition formula, e.g. Ga0.47In0.53As")
      ->required();
  add_common(eval_cmd, eval_opts);

  // sweep
  CommonOpts sweep_opts;
  std::string sweep_spec;
  std::string sweep_family;
  std::string sweep_substrate;
  int sweep_n = 101;
  std::string sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Tabulate a composition path as CSV");
  sweep_cmd->add_option("path", sweep_spec, "Edge spec 'A..B' between two formulas");
  CLI::Option* family_opt =
      sweep_cmd->add_option("--family", sweep_family, "Alloy family for a lattice-matched path");
  sweep_cmd
      ->add_option("--match-substrate", sweep_substrate,
                   "Substrate to match: compound name or lattice constant in angstroms")
      ->needs(family_opt);
  family_opt->needs(sweep_cmd->get_option("--match-substrate"));
  sweep_cmd->add_option("-n", sweep_n, "Number of points (default 101)");
  sweep_cmd->add_option("-o", sweep_out, "Output file (default: stdout)");
  add_common(sweep_cmd, sweep_opts);

  // solve
  CommonOpts solve_opts;
  std::string solve_family;
  std::string solve_substrate;
  double solve_g = 0.0;
  double solve_g_tol = 0.0;
  std::string solve_window;
  double solve_lattice_tol = 1e-3;
  int solve_grid = kDefaultGridResolution;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Search a family for compositions meeting g and gap targets");
  solve_cmd->add_option("--family", solve_family, "Alloy family, e.g. InGaAsP")->required();
  solve_cmd
      ->add_option("--substrate", solve_substrate,
                   "Compound name or lattice constant in angstroms")
      ->required();
  solve_cmd->add_option("--g", solve_g, "Target g (default 0)");
  solve_cmd->add_option("--g-tol", solve_g_tol, "Acceptable |g - target|")->required();
  solve_cmd->add_option("--eg", solve_window, "Gap window 'min:max' in eV")->required();
  solve_cmd->add_option("--lattice-tol", solve_lattice_tol,
                        "Relative lattice-match tolerance (default 1e-3)");
  solve_cmd->add_option("--grid", solve_grid, "Scan resolution (default 1001)");
  add_common(solve_cmd, solve_opts);

  // figure
  CommonOpts figure_opts;
  std::string figure_panel = "A";
  std::string figure_paths = "default";
  int figure_n = 201;
  std::string figure_out_dir = ".";
  std::string figure_experimental;
  CLI::App* figure_cmd =
      app.add_subcommand("figure", "Emit chart data: one CSV per composition path");
  figure_cmd->add_option("--panel", figure_panel, "A: g vs a; B: minimum gap vs a")
      ->check(CLI::IsMember({"A", "B"}));
  figure_cmd->add_option("--paths", figure_paths,
                         "Comma-separated path specs, or 'default' for the shipped set");
  figure_cmd->add_option("-n", figure_n, "Points per path (default 201)");
  figure_cmd->add_option("--out-dir", figure_out_dir, "Directory for the CSV files");
  figure_cmd->add_option("--experimental", figure_experimental,
                         "Measured-points CSV to copy through verbatim");
  add_common(figure_cmd, figure_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_opts, eval_formula);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_opts, sweep_spec, sweep_family, sweep_substrate, sweep_n, sweep_out);
    if (solve_cmd->parsed())
      return cmd_solve(solve_opts, solve_family, solve_substrate, solve_g, solve_g_tol,
                       solve_window, solve_lattice_tol, solve_grid);
    if (figure_cmd->parsed())
      return cmd_figure(figure_opts, figure_panel, figure_paths, figure_n, figure_out_dir,
                        figure_experimental);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
