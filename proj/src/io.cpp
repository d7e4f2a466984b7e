#include "combplan/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "combplan/study.hpp"

namespace combplan {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void warn_unknown_fields(const nlohmann::json& obj, const char* context,
                         std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) ok = true;
    }
    if (!ok) {
      std::cerr << "warning: ignoring unknown field '" << it.key() << "' in "
                << context << "\n";
    }
  }
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

Topology topology_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("topology JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("links")) {
    throw ValidationError("topology JSON must contain 'nodes' and 'links'");
  }
  warn_unknown_fields(doc, "topology document", {"nodes", "links"});

  std::vector<Node> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object() || !n.contains("id") || !n["id"].is_string()) {
      throw ValidationError("topology node record needs a string 'id'");
    }
    warn_unknown_fields(n, "node record", {"id", "weight"});
    Node node;
    node.id = n["id"].get<std::string>();
    if (n.contains("weight")) {
      if (!n["weight"].is_number()) {
        throw ValidationError("node '" + node.id + "': weight must be a number");
      }
      node.weight = n["weight"].get<double>();
    }
    nodes.push_back(std::move(node));
  }

  std::vector<LinkSpec> links;
  for (const auto& l : doc["links"]) {
    if (!l.is_object() || !l.contains("a") || !l.contains("b") ||
        !l.contains("length_km") || !l["a"].is_string() || !l["b"].is_string() ||
        !l["length_km"].is_number()) {
      throw ValidationError(
          "topology link record needs string 'a','b' and numeric 'length_km'");
    }
    warn_unknown_fields(l, "link record", {"a", "b", "length_km"});
    links.push_back({l["a"].get<std::string>(), l["b"].get<std::string>(),
                     l["length_km"].get<double>()});
  }
  return Topology(std::move(nodes), links);
}

Topology load_topology(const std::string& path) {
  return topology_from_json(read_file(path));
}

std::vector<Demand> demands_from_csv(const std::string& text, const Topology& topo) {
  std::vector<Demand> demands;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("src,", 0) == 0) continue;  // header
    std::istringstream row(line);
    std::string src, dst, rate_text;
    if (!std::getline(row, src, ',') || !std::getline(row, dst, ',') ||
        !std::getline(row, rate_text)) {
      throw ValidationError("demands CSV line " + std::to_string(line_no) +
                            ": expected src,dst,gbps");
    }
    const int a = topo.node_index(src);
    const int b = topo.node_index(dst);
    if (a < 0 || b < 0) {
      throw ValidationError("demands CSV line " + std::to_string(line_no) +
                            ": unknown node '" + (a < 0 ? src : dst) + "'");
    }
    if (a == b) {
      throw ValidationError("demands CSV line " + std::to_string(line_no) +
                            ": src equals dst");
    }
    double rate = 0.0;
    try {
      size_t used = 0;
      rate = std::stod(rate_text, &used);
      if (used != rate_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("demands CSV line " + std::to_string(line_no) +
                            ": bad rate '" + rate_text + "'");
    }
    if (!(rate > 0.0)) {
      throw ValidationError("demands CSV line " + std::to_string(line_no) +
                            ": rate must be positive");
    }
    demands.push_back({a, b, rate});
  }
  return demands;
}

std::vector<Demand> load_demands(const std::string& path, const Topology& topo) {
  return demands_from_csv(read_file(path), topo);
}

std::string demands_to_csv(const Topology& topo, std::span<const Demand> demands) {
  std::string out = "src,dst,gbps\n";
  for (const auto& d : demands) {
    out += topo.node(d.src).id + ',' + topo.node(d.dst).id + ',' +
           fmt("%.3f", d.rate_gbps) + '\n';
  }
  return out;
}

std::string plan_csv(const Topology& topo, std::span<const Demand> demands,
                     const PlanOutcome& plan, const Scenario& scenario) {
  std::string out = "src,dst,path,config,slots,snr_db,source_type\n";
  for (const auto& lp : plan.lightpaths) {
    const auto& cfg = config_table()[lp.config_index];
    std::string path_text;
    for (size_t i = 0; i < lp.nodes.size(); ++i) {
      if (i > 0) path_text += '|';
      path_text += topo.node(lp.nodes[i]).id;
    }
    out += topo.node(lp.src).id + ',' + topo.node(lp.dst).id + ',' + path_text +
           ',' + cfg.name() + ',' + std::to_string(lp.slot_start) + '-' +
           std::to_string(lp.slot_start + lp.slot_width - 1) + ',' +
           fmt("%.3f", lp.snr_db) + ',' +
           source_type_name(lp.source_type, lp.block_index, lp.line_index) + '\n';
  }
  double requested = 0.0, served = 0.0;
  for (const auto& r : plan.demand_results) {
    requested += r.requested_gbps;
    served += r.served_gbps;
  }
  out += "# summary scenario=" + scenario.label() +
         " lightpaths=" + std::to_string(plan.lightpaths.size()) +
         " blocks=" + std::to_string(plan.blocks.size()) +
         " lasers=" + std::to_string(laser_count(plan, scenario)) +
         " requested_gbps=" + fmt("%.3f", requested) +
         " served_gbps=" + fmt("%.3f", served) +
         " unserved_gbps=" + fmt("%.3f", requested - served) + '\n';
  return out;
}

}  // namespace combplan
