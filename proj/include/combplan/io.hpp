#pragma once

#include <string>
#include <vector>

#include "combplan/rcsa.hpp"
#include "combplan/topology.hpp"
#include "combplan/transponder.hpp"

namespace combplan {

// Topology JSON:
//   {"nodes":[{"id":str,"weight":float}],"links":[{"a":str,"b":str,"length_km":float}]}
// Unknown fields are warned about on stderr; malformed records are errors.
Topology load_topology(const std::string& path);
Topology topology_from_json(const std::string& text);

// Demands CSV: src,dst,gbps with an optional header line.
std::vector<Demand> load_demands(const std::string& path, const Topology& topo);
std::vector<Demand> demands_from_csv(const std::string& text, const Topology& topo);
std::string demands_to_csv(const Topology& topo, std::span<const Demand> demands);

// One row per lightpath (src,dst,path,config,slots,snr_db,source_type) plus
// a trailing summary row.
std::string plan_csv(const Topology& topo, std::span<const Demand> demands,
                     const PlanOutcome& plan, const Scenario& scenario);

}  // namespace combplan
