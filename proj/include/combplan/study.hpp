#pragma once

#include <span>
#include <string>
#include <vector>

#include "combplan/rcsa.hpp"

namespace combplan {

// Gravity traffic: demand(i,j) proportional to w_i*w_j over unordered pairs,
// scaled to the target aggregate, then floored at 25 Gb/s granularity.
std::vector<Demand> gravity_demands(const Topology& topo, double target_art_gbps,
                                    double floor_gbps = 25.0);

struct LaserCountOptions {
  // Flex lines default to grouping by source node; the stricter reading
  // groups per (source, destination) pair.
  bool group_by_pair = false;
};

int laser_count(const PlanOutcome& plan, const Scenario& scenario,
                LaserCountOptions options = {});

struct PlanResultRow {
  std::string scenario;
  double target_art_gbps = 0.0;
  double art_gbps = 0.0;  // post-floor demand sum; UP is exact against this
  int lightpaths = 0;
  int lasers = 0;
  double served_gbps = 0.0;
  double up = 0.0;
  double mean_snr_db = 0.0;  // dB mean over deployed lightpaths
  double occupancy = 0.0;
};

PlanResultRow summarize_plan(const std::string& scenario_label,
                             double target_art_gbps,
                             std::span<const Demand> demands,
                             const PlanOutcome& plan, const Scenario& scenario);

struct PenaltyRow {
  double penalty_db = 0.0;
  double art_gbps = 0.0;
  int lightpaths = 0;
  double delta_lp_pct = 0.0;  // vs the SWS plan at the same ART
  double mean_snr_db = 0.0;
  double snr_diff_db = 0.0;   // SWS mean minus MWS mean
};

struct SweepSpec {
  std::vector<Scenario> scenarios;
  std::vector<double> art_grid_gbps;    // ascending
  std::vector<double> penalty_grid_db;  // flex penalties swept at one ART
  double penalty_art_gbps = 0.0;        // 0 selects the middle grid point
  double demand_floor_gbps = 25.0;
};

struct SweepResult {
  std::vector<PlanResultRow> rows;        // ordered by (scenario, ART)
  std::vector<PenaltyRow> penalty_rows;   // ordered by penalty
};

enum class ExecMode { kSerial, kParallel };

// Every (scenario, ART) cell regenerates demands, plans, and summarizes.
// Cells are independent; kParallel runs them under OpenMP with results
// assembled in deterministic order. kSerial is the reference path.
SweepResult run_sweep(const Topology& topo, const RouteCache& routes,
                      const SweepSpec& spec, const PlannerParams& params,
                      ExecMode mode = ExecMode::kSerial);

// Largest per-unit MWS cost multiple of an SWS laser at which the flex plan
// costs no more than the SWS plan, with the laser a fixed share of the
// transponder cost.
double cost_breakeven(int lasers_sws, int lightpaths_sws, int lasers_flex,
                      int lightpaths_flex, double sws_laser_cost_share = 0.33);

std::string results_csv(const SweepResult& result);
std::string penalty_csv(const SweepResult& result);

}  // namespace combplan
