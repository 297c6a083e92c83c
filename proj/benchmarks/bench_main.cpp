#include <benchmark/benchmark.h>

#include "gfactor/database.hpp"
#include "gfactor/gfactor.hpp"
#include "gfactor/solver.hpp"

using namespace gfactor;

namespace {

const MaterialsDatabase& db() {
  static const MaterialsDatabase database = load_database_file(GFACTOR_DATA_FILE);
  return database;
}

void BM_RothG(benchmark::State& state) {
  double eg = 1.4236;
  for (auto _ : state) {
    benchmark::DoNotOptimize(roth_g(eg, 0.108, 20.7));
    eg += 1e-12;  // defeat constant folding without changing the regime
  }
}
BENCHMARK(BM_RothG);

void BM_AlloyParams(benchmark::State& state) {
  const Composition comp = parse_composition("In0.8Ga0.2As0.4P0.6");
  for (auto _ : state) benchmark::DoNotOptimize(alloy_params(comp, db()));
}
BENCHMARK(BM_AlloyParams);

void BM_ElectronG(benchmark::State& state) {
  const Composition comp = parse_composition("Ga0.47In0.53As");
  for (auto _ : state) benchmark::DoNotOptimize(electron_g(comp, db()));
}
BENCHMARK(BM_ElectronG);

void BM_MatchedSweep(benchmark::State& state) {
  const CompositionPath path = lattice_matched_path(parse_family("InGaAsP"), 5.86, db());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_path(path, n, db()));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_MatchedSweep)->Arg(101)->Arg(1001);

void BM_SolveDesign(benchmark::State& state) {
  DesignProblem problem;
  problem.family = parse_family("InGaAsP");
  problem.substrate_label = "InP";
  problem.substrate_a = 5.86;
  problem.g_tolerance = 0.1;
  problem.eg_window = {0.75, 1.45};
  problem.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_design(problem, db()));
}
BENCHMARK(BM_SolveDesign)->Arg(1001);

void BM_LoadDatabase(benchmark::State& state) {
  const std::string text = serialize_database(db());
  for (auto _ : state) benchmark::DoNotOptimize(load_database(text));
}
BENCHMARK(BM_LoadDatabase);

}  // namespace

BENCHMARK_MAIN();
