#include "combplan/rcsa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <stdexcept>

#include "combplan/units.hpp"

namespace combplan {

namespace {

constexpr double kRateEpsGbps = 1e-6;

// Rank of each node id in sorted-id order, for lexicographic tie-breaks.
std::vector<int> id_ranks(const Topology& topo) {
  std::vector<int> order(topo.node_count());
  for (int i = 0; i < topo.node_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return topo.node(a).id < topo.node(b).id;
  });
  std::vector<int> rank(topo.node_count());
  for (int r = 0; r < topo.node_count(); ++r) rank[order[r]] = r;
  return rank;
}

std::vector<double> dijkstra_from(const Topology& topo, int src) {
  std::vector<double> dist(topo.node_count(), std::numeric_limits<double>::infinity());
  dist[src] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.emplace(0.0, src);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, li] : topo.neighbors(u)) {
      const double nd = d + topo.link(li).length_km;
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

// Best-first enumeration of simple paths ordered by (length, lexicographic
// node-id sequence), pruned with exact distance-to-destination bounds. With
// a consistent heuristic the destination is reached in exactly that order,
// so the first k completions are the answer.
std::vector<Path> k_shortest_paths(const Topology& topo, int src, int dst, int k) {
  if (src == dst) throw std::invalid_argument("k_shortest_paths: src == dst");
  std::vector<Path> result;
  if (k <= 0) return result;

  const auto rank = id_ranks(topo);
  const auto to_dst = dijkstra_from(topo, dst);
  if (!std::isfinite(to_dst[src])) return result;

  struct Entry {
    double f = 0.0;        // length so far + remaining lower bound
    double length = 0.0;
    std::vector<int> nodes;
    std::vector<int> links;
  };
  auto seq_greater = [&](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(
        b.begin(), b.end(), a.begin(), a.end(),
        [&](int x, int y) { return rank[x] < rank[y]; });
  };
  auto worse = [&](const Entry& a, const Entry& b) {
    if (a.f != b.f) return a.f > b.f;
    return seq_greater(a.nodes, b.nodes);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> frontier(worse);
  frontier.push({to_dst[src], 0.0, {src}, {}});

  while (!frontier.empty()) {
    Entry cur = frontier.top();
    frontier.pop();
    const int u = cur.nodes.back();
    if (u == dst) {
      Path p;
      p.nodes = cur.nodes;
      p.links = cur.links;
      p.length_km = cur.length;
      for (int li : p.links) {
        const auto& spans = topo.link(li).spans_km;
        p.spans_km.insert(p.spans_km.end(), spans.begin(), spans.end());
      }
      result.push_back(std::move(p));
      if (static_cast<int>(result.size()) == k) break;
      continue;
    }
    for (const auto& [v, li] : topo.neighbors(u)) {
      if (std::find(cur.nodes.begin(), cur.nodes.end(), v) != cur.nodes.end()) {
        continue;
      }
      if (!std::isfinite(to_dst[v])) continue;
      Entry next;
      next.length = cur.length + topo.link(li).length_km;
      next.f = next.length + to_dst[v];
      next.nodes = cur.nodes;
      next.nodes.push_back(v);
      next.links = cur.links;
      next.links.push_back(li);
      frontier.push(std::move(next));
    }
  }
  return result;
}

RouteCache::RouteCache(const Topology& topo, int k, const FiberParams& fiber,
                       const LaunchSpec& launch)
    : node_count_(topo.node_count()),
      pair_paths_(static_cast<size_t>(node_count_) * node_count_) {
  struct PairJob {
    int a, b;
  };
  std::vector<PairJob> jobs;
  for (int a = 0; a < node_count_; ++a) {
    for (int b = a + 1; b < node_count_; ++b) jobs.push_back({a, b});
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t j = 0; j < jobs.size(); ++j) {
    auto paths = k_shortest_paths(topo, jobs[j].a, jobs[j].b, k);
    for (auto& p : paths) {
      p.noise_mw_per_ghz = path_noise_mw_per_ghz(fiber, launch, p.spans_km);
    }
    pair_paths_[static_cast<size_t>(jobs[j].a) * node_count_ + jobs[j].b] =
        std::move(paths);
  }
}

std::span<const Path> RouteCache::paths(int src, int dst) const {
  const int a = std::min(src, dst);
  const int b = std::max(src, dst);
  return pair_paths_[static_cast<size_t>(a) * node_count_ + b];
}

std::string source_type_name(SourceType t, int block, int line) {
  switch (t) {
    case SourceType::kSws: return "sws";
    case SourceType::kFlexLine: return "flex";
    case SourceType::kFixedLine: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "fixed-b%d-l%d", block, line);
      return buf;
    }
  }
  return "?";
}

Planner::Planner(const Topology& topo, const RouteCache& routes,
                 const Scenario& scenario, const PlannerParams& params)
    : topo_(topo), routes_(routes), scenario_(scenario), params_(params) {
  scenario_.validate();
  outcome_.grid = SpectrumGrid(topo.link_count(), params.slot_count);
}

std::vector<Planner::Candidate> Planner::rank_candidates(
    std::span<const Path> paths, double remainder_gbps, double min_net_gbps,
    double max_width_ghz, double penalty_db) const {
  const double osnr_db = params_.osnr_tx_sws_db - penalty_db;
  const auto& table = config_table();
  std::vector<Candidate> cands;
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const Path& path = paths[pi];
    for (size_t ci = 0; ci < table.size(); ++ci) {
      const TransponderConfig& cfg = table[ci];
      if (cfg.net_rate_gbps < min_net_gbps - kRateEpsGbps) continue;
      if (cfg.width_ghz > max_width_ghz + 1e-9) continue;
      const double inv =
          1.0 / db_to_lin(snr_tx_db(osnr_db, cfg.symbol_rate_gbd)) +
          path.noise_mw_per_ghz * cfg.width_ghz /
              params_.launch.channel_power_mw(cfg.symbol_rate_gbd);
      const double snr = lin_to_db(1.0 / inv);
      if (snr < cfg.required_snr_db) continue;
      Candidate c;
      c.path_index = static_cast<int>(pi);
      c.config_index = static_cast<int>(ci);
      c.carried_gbps = std::min(cfg.net_rate_gbps, remainder_gbps);
      c.projected_lps = static_cast<int>(
          std::ceil((remainder_gbps - kRateEpsGbps) / cfg.net_rate_gbps));
      c.snr_db = snr;
      cands.push_back(c);
    }
  }
  // Carried rate first, then fewest lightpaths projected for the whole
  // demand, then the narrowest channel that achieves both (a wider config
  // carrying the same rate only burns spectrum), then path length.
  const auto& table_ref = table;
  std::sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.carried_gbps != b.carried_gbps) return a.carried_gbps > b.carried_gbps;
    if (a.projected_lps != b.projected_lps) return a.projected_lps < b.projected_lps;
    const auto& ca = table_ref[a.config_index];
    const auto& cb = table_ref[b.config_index];
    if (ca.width_ghz != cb.width_ghz) return ca.width_ghz < cb.width_ghz;
    const double la = paths[a.path_index].length_km;
    const double lb = paths[b.path_index].length_km;
    if (la != lb) return la < lb;
    if (a.path_index != b.path_index) return a.path_index < b.path_index;
    if (ca.required_snr_db != cb.required_snr_db) {
      return ca.required_snr_db < cb.required_snr_db;
    }
    return a.config_index < b.config_index;
  });
  return cands;
}

double Planner::place_sws(const Demand& demand, int demand_index,
                          double remainder, bool whole_demand_only,
                          double penalty_db, SourceType type) {
  const auto paths = routes_.paths(demand.src, demand.dst);
  while (remainder > kRateEpsGbps) {
    const double min_net = whole_demand_only ? remainder : 0.0;
    const auto cands =
        rank_candidates(paths, remainder, min_net,
                        std::numeric_limits<double>::infinity(), penalty_db);
    bool placed = false;
    for (const Candidate& cand : cands) {
      const Path& path = paths[cand.path_index];
      const auto& cfg = config_table()[cand.config_index];
      const auto start = outcome_.grid.first_fit(path.links, cfg.width_slots);
      if (!start) continue;
      for (int li : path.links) outcome_.grid.occupy(li, *start, cfg.width_slots);
      Lightpath lp;
      lp.demand_index = demand_index;
      lp.src = demand.src;
      lp.dst = demand.dst;
      lp.nodes = path.nodes;
      lp.links = path.links;
      lp.config_index = cand.config_index;
      lp.slot_start = *start;
      lp.slot_width = cfg.width_slots;
      lp.source_type = type;
      lp.snr_db = cand.snr_db;
      lp.carried_gbps = cand.carried_gbps;
      outcome_.lightpaths.push_back(std::move(lp));
      remainder -= cand.carried_gbps;
      placed = true;
      break;
    }
    if (!placed) break;
    if (whole_demand_only) break;
  }
  return std::max(remainder, 0.0);
}

bool Planner::activate_line(const Demand& demand, int demand_index,
                            int block_index, double& remainder) {
  MwsBlock& block = outcome_.blocks[block_index];
  const Path* path = block_paths_[block_index];
  const auto cands = rank_candidates({path, 1}, remainder, 0.0,
                                     scenario_.fsr_ghz, scenario_.mws_penalty_db);
  if (cands.empty()) return false;
  const Candidate& cand = cands.front();
  const auto& cfg = config_table()[cand.config_index];
  const int line = block.active;
  Lightpath lp;
  lp.demand_index = demand_index;
  lp.src = demand.src;
  lp.dst = demand.dst;
  lp.nodes = block.nodes;
  lp.links = block.links;
  lp.config_index = cand.config_index;
  lp.slot_start = block.slot_start + line * block.fsr_slots;
  lp.slot_width = cfg.width_slots;
  lp.source_type = SourceType::kFixedLine;
  lp.block_index = block_index;
  lp.line_index = line;
  lp.snr_db = cand.snr_db;
  lp.carried_gbps = cand.carried_gbps;
  outcome_.lightpaths.push_back(std::move(lp));
  block.active += 1;
  remainder -= cand.carried_gbps;
  return true;
}

double Planner::place_fixed(const Demand& demand, int demand_index,
                            double remainder) {
  // Demands a single SWS lightpath can carry stay on SWS hardware.
  remainder = place_sws(demand, demand_index, remainder,
                        /*whole_demand_only=*/true, 0.0, SourceType::kSws);
  if (remainder <= kRateEpsGbps) return 0.0;

  const auto paths = routes_.paths(demand.src, demand.dst);
  const int fsr_slots =
      static_cast<int>(std::lround(scenario_.fsr_ghz / kRefBandwidthGhz));
  while (remainder > kRateEpsGbps) {
    // Reuse idle lines of this pair's blocks before reserving new spectrum.
    bool activated = false;
    for (size_t bi = 0; bi < outcome_.blocks.size(); ++bi) {
      const MwsBlock& block = outcome_.blocks[bi];
      if (block.src != demand.src || block.dst != demand.dst) continue;
      if (block.active >= block.lines) continue;
      if (activate_line(demand, demand_index, static_cast<int>(bi), remainder)) {
        activated = true;
        break;
      }
    }
    if (activated) continue;

    // Open a new block: first path, in length order, that supports some
    // config inside the FSR slice and has room for the whole N-line block.
    bool opened = false;
    for (const Path& path : paths) {
      if (rank_candidates({&path, 1}, remainder, 0.0, scenario_.fsr_ghz,
                          scenario_.mws_penalty_db)
              .empty()) {
        continue;
      }
      const int block_width = scenario_.mws_lines * fsr_slots;
      const auto start = outcome_.grid.first_fit(path.links, block_width);
      if (!start) continue;
      for (int li : path.links) outcome_.grid.occupy(li, *start, block_width);
      MwsBlock block;
      block.src = demand.src;
      block.dst = demand.dst;
      block.nodes = path.nodes;
      block.links = path.links;
      block.slot_start = *start;
      block.fsr_slots = fsr_slots;
      block.lines = scenario_.mws_lines;
      outcome_.blocks.push_back(std::move(block));
      block_paths_.push_back(&path);
      opened = true;
      break;
    }
    if (!opened) break;
  }
  return std::max(remainder, 0.0);
}

DemandResult Planner::plan_demand(const Demand& demand, int demand_index) {
  if (demand.src == demand.dst || !(demand.rate_gbps > 0.0)) {
    throw std::invalid_argument("plan_demand: invalid demand");
  }
  double remainder = demand.rate_gbps;
  switch (scenario_.kind) {
    case ScenarioKind::kSws:
      remainder = place_sws(demand, demand_index, remainder, false, 0.0,
                            SourceType::kSws);
      break;
    case ScenarioKind::kFlexMws:
      remainder = place_sws(demand, demand_index, remainder, false,
                            scenario_.mws_penalty_db, SourceType::kFlexLine);
      break;
    case ScenarioKind::kFixedMws:
      remainder = place_fixed(demand, demand_index, remainder);
      break;
  }
  DemandResult r;
  r.requested_gbps = demand.rate_gbps;
  r.unserved_gbps = remainder;
  r.served_gbps = demand.rate_gbps - remainder;
  return r;
}

PlanOutcome Planner::take_outcome() { return std::move(outcome_); }

PlanOutcome plan_all(const Topology& topo, const RouteCache& routes,
                     std::span<const Demand> demands, const Scenario& scenario,
                     const PlannerParams& params) {
  Planner planner(topo, routes, scenario, params);

  std::vector<int> order(demands.size());
  for (size_t i = 0; i < demands.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (demands[a].rate_gbps != demands[b].rate_gbps) {
      return demands[a].rate_gbps > demands[b].rate_gbps;
    }
    const auto& sa = topo.node(demands[a].src).id;
    const auto& sb = topo.node(demands[b].src).id;
    if (sa != sb) return sa < sb;
    const auto& da = topo.node(demands[a].dst).id;
    const auto& db = topo.node(demands[b].dst).id;
    if (da != db) return da < db;
    return a < b;
  });

  std::vector<DemandResult> results(demands.size());
  for (int idx : order) {
    results[idx] = planner.plan_demand(demands[idx], idx);
  }
  PlanOutcome outcome = planner.take_outcome();
  outcome.demand_results = std::move(results);
  return outcome;
}

}  // namespace combplan
