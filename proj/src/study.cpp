#include "combplan/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace combplan {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

std::vector<Demand> gravity_demands(const Topology& topo, double target_art_gbps,
                                    double floor_gbps) {
  if (!(target_art_gbps > 0.0)) {
    throw std::invalid_argument("gravity_demands: ART must be positive");
  }
  double product_sum = 0.0;
  int positive = 0;
  for (int i = 0; i < topo.node_count(); ++i) {
    if (topo.node(i).weight > 0.0) ++positive;
    for (int j = i + 1; j < topo.node_count(); ++j) {
      product_sum += topo.node(i).weight * topo.node(j).weight;
    }
  }
  if (positive < 2 || product_sum <= 0.0) {
    throw std::invalid_argument(
        "gravity_demands: need at least two nodes with positive weight");
  }
  std::vector<Demand> demands;
  for (int i = 0; i < topo.node_count(); ++i) {
    for (int j = i + 1; j < topo.node_count(); ++j) {
      const double product = topo.node(i).weight * topo.node(j).weight;
      if (product <= 0.0) continue;
      const double rate = target_art_gbps * product / product_sum;
      demands.push_back({i, j, std::max(rate, floor_gbps)});
    }
  }
  return demands;
}

int laser_count(const PlanOutcome& plan, const Scenario& scenario,
                LaserCountOptions options) {
  switch (scenario.kind) {
    case ScenarioKind::kSws:
      return static_cast<int>(plan.lightpaths.size());
    case ScenarioKind::kFlexMws: {
      // One MWS feeds up to N lines from the same source.
      std::map<std::pair<int, int>, int> groups;
      for (const auto& lp : plan.lightpaths) {
        const auto key = options.group_by_pair ? std::make_pair(lp.src, lp.dst)
                                               : std::make_pair(lp.src, -1);
        groups[key] += 1;
      }
      int lasers = 0;
      for (const auto& [key, count] : groups) {
        lasers += (count + scenario.mws_lines - 1) / scenario.mws_lines;
      }
      return lasers;
    }
    case ScenarioKind::kFixedMws: {
      int sws = 0;
      for (const auto& lp : plan.lightpaths) {
        if (lp.source_type == SourceType::kSws) ++sws;
      }
      return sws + static_cast<int>(plan.blocks.size());
    }
  }
  return 0;
}

PlanResultRow summarize_plan(const std::string& scenario_label,
                             double target_art_gbps,
                             std::span<const Demand> demands,
                             const PlanOutcome& plan, const Scenario& scenario) {
  PlanResultRow row;
  row.scenario = scenario_label;
  row.target_art_gbps = target_art_gbps;
  for (const auto& d : demands) row.art_gbps += d.rate_gbps;
  row.lightpaths = static_cast<int>(plan.lightpaths.size());
  row.lasers = laser_count(plan, scenario);
  for (const auto& r : plan.demand_results) row.served_gbps += r.served_gbps;
  row.up = row.art_gbps > 0.0 ? (row.art_gbps - row.served_gbps) / row.art_gbps : 0.0;
  if (!plan.lightpaths.empty()) {
    double snr_sum = 0.0;
    for (const auto& lp : plan.lightpaths) snr_sum += lp.snr_db;
    row.mean_snr_db = snr_sum / static_cast<double>(plan.lightpaths.size());
  }
  row.occupancy = plan.grid.occupancy();
  return row;
}

namespace {

struct Cell {
  Scenario scenario;
  std::string label;
  double art = 0.0;
  bool penalty_cell = false;   // belongs to the fixed-ART penalty sweep
  double penalty_db = 0.0;
};

PlanResultRow run_cell(const Topology& topo, const RouteCache& routes,
                       const Cell& cell, const PlannerParams& params,
                       double floor_gbps) {
  const auto demands = gravity_demands(topo, cell.art, floor_gbps);
  const auto plan = plan_all(topo, routes, demands, cell.scenario, params);
  return summarize_plan(cell.label, cell.art, demands, plan, cell.scenario);
}

}  // namespace

SweepResult run_sweep(const Topology& topo, const RouteCache& routes,
                      const SweepSpec& spec, const PlannerParams& params,
                      ExecMode mode) {
  for (size_t i = 1; i < spec.art_grid_gbps.size(); ++i) {
    if (spec.art_grid_gbps[i] <= spec.art_grid_gbps[i - 1]) {
      throw std::invalid_argument("run_sweep: ART grid must be ascending");
    }
  }
  if (spec.art_grid_gbps.empty()) {
    throw std::invalid_argument("run_sweep: empty ART grid");
  }

  double penalty_art = spec.penalty_art_gbps;
  if (penalty_art <= 0.0) {
    penalty_art = spec.art_grid_gbps[spec.art_grid_gbps.size() / 2];
  }

  std::vector<Cell> cells;
  for (const auto& scenario : spec.scenarios) {
    for (double art : spec.art_grid_gbps) {
      cells.push_back({scenario, scenario.label(), art, false, 0.0});
    }
  }
  // The penalty sweep needs an SWS baseline at its ART plus one flex cell
  // per penalty value.
  const size_t penalty_base_index = cells.size();
  if (!spec.penalty_grid_db.empty()) {
    Scenario sws;
    sws.kind = ScenarioKind::kSws;
    cells.push_back({sws, "penalty_sws", penalty_art, true, 0.0});
    for (double p : spec.penalty_grid_db) {
      Scenario flex;
      flex.kind = ScenarioKind::kFlexMws;
      flex.mws_penalty_db = p;
      cells.push_back({flex, "penalty_flex", penalty_art, true, p});
    }
  }

  std::vector<PlanResultRow> cell_rows(cells.size());
  if (mode == ExecMode::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < cells.size(); ++i) {
      cell_rows[i] = run_cell(topo, routes, cells[i], params, spec.demand_floor_gbps);
    }
  } else {
    for (size_t i = 0; i < cells.size(); ++i) {
      cell_rows[i] = run_cell(topo, routes, cells[i], params, spec.demand_floor_gbps);
    }
  }

  SweepResult result;
  result.rows.assign(cell_rows.begin(), cell_rows.begin() + penalty_base_index);
  if (!spec.penalty_grid_db.empty()) {
    const PlanResultRow& base = cell_rows[penalty_base_index];
    for (size_t pi = 0; pi < spec.penalty_grid_db.size(); ++pi) {
      const PlanResultRow& flex = cell_rows[penalty_base_index + 1 + pi];
      PenaltyRow row;
      row.penalty_db = spec.penalty_grid_db[pi];
      row.art_gbps = flex.art_gbps;
      row.lightpaths = flex.lightpaths;
      row.delta_lp_pct =
          base.lightpaths > 0
              ? 100.0 * (flex.lightpaths - base.lightpaths) / base.lightpaths
              : 0.0;
      row.mean_snr_db = flex.mean_snr_db;
      row.snr_diff_db = base.mean_snr_db - flex.mean_snr_db;
      result.penalty_rows.push_back(row);
    }
  }
  return result;
}

double cost_breakeven(int lasers_sws, int lightpaths_sws, int lasers_flex,
                      int lightpaths_flex, double sws_laser_cost_share) {
  if (lasers_flex <= 0) {
    throw std::domain_error("cost_breakeven: flex plan has no lasers");
  }
  const double c_laser = sws_laser_cost_share;
  const double c_rest = 1.0 - sws_laser_cost_share;
  return (lasers_sws * c_laser + (lightpaths_sws - lightpaths_flex) * c_rest) /
         (lasers_flex * c_laser);
}

std::string results_csv(const SweepResult& result) {
  std::string out =
      "scenario,target_art_gbps,art_gbps,lightpaths,lasers,served_gbps,up,"
      "mean_snr_db,occupancy\n";
  for (const auto& r : result.rows) {
    out += r.scenario;
    out += ',' + fmt("%.3f", r.target_art_gbps);
    out += ',' + fmt("%.3f", r.art_gbps);
    out += ',' + std::to_string(r.lightpaths);
    out += ',' + std::to_string(r.lasers);
    out += ',' + fmt("%.3f", r.served_gbps);
    out += ',' + fmt("%.6f", r.up);
    out += ',' + fmt("%.3f", r.mean_snr_db);
    out += ',' + fmt("%.6f", r.occupancy);
    out += '\n';
  }
  return out;
}

std::string penalty_csv(const SweepResult& result) {
  std::string out = "penalty_db,art_gbps,lightpaths,delta_lp_pct,mean_snr_db,snr_diff_db\n";
  for (const auto& r : result.penalty_rows) {
    out += fmt("%.2f", r.penalty_db);
    out += ',' + fmt("%.3f", r.art_gbps);
    out += ',' + std::to_string(r.lightpaths);
    out += ',' + fmt("%.4f", r.delta_lp_pct);
    out += ',' + fmt("%.3f", r.mean_snr_db);
    out += ',' + fmt("%.4f", r.snr_diff_db);
    out += '\n';
  }
  return out;
}

}  // namespace combplan
