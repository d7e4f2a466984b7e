#pragma once

#include <span>
#include <string>
#include <vector>

#include "combplan/qot.hpp"
#include "combplan/spectrum.hpp"
#include "combplan/topology.hpp"
#include "combplan/transponder.hpp"

namespace combplan {

struct Path {
  std::vector<int> nodes;
  std::vector<int> links;
  double length_km = 0.0;
  std::vector<double> spans_km;      // concatenation of link spans
  double noise_mw_per_ghz = 0.0;     // ASE+NLI per GHz of channel width
};

// Up to k loop-free paths, ascending by length, ties by lexicographic
// node-id sequence (Yen's algorithm over Dijkstra).
std::vector<Path> k_shortest_paths(const Topology& topo, int src, int dst,
                                   int k = 3);

// Candidate routes for every node pair, with per-path noise precomputed.
// Built once per topology; read-only afterwards.
class RouteCache {
 public:
  RouteCache(const Topology& topo, int k, const FiberParams& fiber,
             const LaunchSpec& launch);

  std::span<const Path> paths(int src, int dst) const;

 private:
  int node_count_;
  std::vector<std::vector<Path>> pair_paths_;  // indexed by unordered pair
};

enum class SourceType { kSws, kFlexLine, kFixedLine };

std::string source_type_name(SourceType t, int block, int line);

struct Lightpath {
  int demand_index = -1;  // position in the caller's demand list
  int src = -1;
  int dst = -1;
  std::vector<int> nodes;
  std::vector<int> links;
  int config_index = -1;  // into config_table()
  int slot_start = -1;
  int slot_width = 0;
  SourceType source_type = SourceType::kSws;
  int block_index = -1;   // fixed-MWS lines only
  int line_index = -1;
  double snr_db = 0.0;
  double carried_gbps = 0.0;
};

// A fixed-FSR MWS reservation: N line positions on one path, all slots held
// even while lines idle, active lines co-propagating on the block's path.
struct MwsBlock {
  int src = -1;
  int dst = -1;
  std::vector<int> nodes;
  std::vector<int> links;
  int slot_start = -1;
  int fsr_slots = 0;
  int lines = 0;
  int active = 0;
};

struct DemandResult {
  double requested_gbps = 0.0;
  double served_gbps = 0.0;
  double unserved_gbps = 0.0;
};

struct PlanOutcome {
  std::vector<Lightpath> lightpaths;
  std::vector<MwsBlock> blocks;
  std::vector<DemandResult> demand_results;  // parallel to the input demands
  SpectrumGrid grid{0};
};

struct PlannerParams {
  FiberParams fiber;
  LaunchSpec launch;
  double osnr_tx_sws_db = 36.0;  // transmit OSNR of the SWS reference chain
  int k = 3;
  int slot_count = kDefaultSlotCount;
};

// One-pass static planning: demands processed by descending rate (ties by
// node-id pair), greedy per-demand placement, first-fit spectrum.
class Planner {
 public:
  Planner(const Topology& topo, const RouteCache& routes,
          const Scenario& scenario, const PlannerParams& params);

  // Serves as much of the demand as possible; records the remainder.
  DemandResult plan_demand(const Demand& demand, int demand_index);

  PlanOutcome take_outcome();

 private:
  struct Candidate {
    int path_index = -1;
    int config_index = -1;
    double carried_gbps = 0.0;
    int projected_lps = 0;
    double snr_db = 0.0;
  };

  std::vector<Candidate> rank_candidates(std::span<const Path> paths,
                                         double remainder_gbps,
                                         double min_net_gbps,
                                         double max_width_ghz,
                                         double penalty_db) const;
  double place_sws(const Demand& demand, int demand_index, double remainder,
                   bool whole_demand_only, double penalty_db, SourceType type);
  double place_fixed(const Demand& demand, int demand_index, double remainder);
  bool activate_line(const Demand& demand, int demand_index, int block_index,
                     double& remainder);

  const Topology& topo_;
  const RouteCache& routes_;
  Scenario scenario_;
  PlannerParams params_;
  PlanOutcome outcome_;
  std::vector<const Path*> block_paths_;  // backing route of each MwsBlock
};

PlanOutcome plan_all(const Topology& topo, const RouteCache& routes,
                     std::span<const Demand> demands, const Scenario& scenario,
                     const PlannerParams& params);

}  // namespace combplan
