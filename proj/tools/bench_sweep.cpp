// Times the scenario sweep in serial reference mode against the OpenMP
// cell-parallel mode and checks the outputs are byte-identical.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "combplan/io.hpp"
#include "combplan/study.hpp"
#include "combplan/txchain.hpp"

using namespace combplan;

namespace {

double seconds_for(const Topology& topo, const RouteCache& routes,
                   const SweepSpec& spec, const PlannerParams& params,
                   ExecMode mode, std::string& csv_out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = run_sweep(topo, routes, spec, params, mode);
  const auto t1 = std::chrono::steady_clock::now();
  csv_out = results_csv(result) + penalty_csv(result);
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string topo_path = argc > 1 ? argv[1] : "data/germany17.json";
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const auto topo = load_topology(topo_path);
  PlannerParams params;
  params.osnr_tx_sws_db = sws_reference_osnr_db();
  RouteCache routes(topo, params.k, params.fiber, params.launch);

  SweepSpec spec;
  for (const char* s : {"sws", "flex1", "flex3", "fixed"}) {
    Scenario sc;
    if (std::string(s) == "sws") {
      sc.kind = ScenarioKind::kSws;
    } else if (std::string(s) == "fixed") {
      sc.kind = ScenarioKind::kFixedMws;
      sc.mws_penalty_db = 1.0;
    } else {
      sc.kind = ScenarioKind::kFlexMws;
      sc.mws_penalty_db = std::string(s) == "flex1" ? 1.0 : 3.0;
    }
    spec.scenarios.push_back(sc);
  }
  for (double art = 20e3; art <= 320e3; art += 10e3) {
    spec.art_grid_gbps.push_back(art);
  }
  spec.penalty_grid_db = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

  std::printf("topology: %s  cells: %zu scenario-ART points\n", topo_path.c_str(),
              spec.scenarios.size() * spec.art_grid_gbps.size());
#ifdef _OPENMP
  std::printf("threads:  %d\n", omp_get_max_threads());
#else
  std::printf("threads:  1 (built without OpenMP)\n");
#endif

  double serial_best = 1e100, parallel_best = 1e100;
  std::string serial_csv, parallel_csv;
  for (int r = 0; r < repeats; ++r) {
    double t = seconds_for(topo, routes, spec, params, ExecMode::kSerial, serial_csv);
    serial_best = std::min(serial_best, t);
    t = seconds_for(topo, routes, spec, params, ExecMode::kParallel, parallel_csv);
    parallel_best = std::min(parallel_best, t);
  }

  std::printf("serial    %8.3f s\n", serial_best);
  std::printf("parallel  %8.3f s\n", parallel_best);
  std::printf("speedup   %8.2fx\n", serial_best / parallel_best);
  if (serial_csv != parallel_csv) {
    std::printf("FAIL: serial and parallel outputs differ\n");
    return 1;
  }
  std::printf("outputs identical: yes\n");
  return 0;
}
