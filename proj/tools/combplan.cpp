#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "combplan/io.hpp"
#include "combplan/qot.hpp"
#include "combplan/study.hpp"
#include "combplan/txchain.hpp"
#include "combplan/units.hpp"

namespace {

using namespace combplan;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Scenario make_scenario(const std::string& kind, double penalty_db, int lines,
                       double fsr_ghz) {
  Scenario s;
  if (kind == "sws") {
    s.kind = ScenarioKind::kSws;
  } else if (kind == "flex") {
    s.kind = ScenarioKind::kFlexMws;
    s.mws_penalty_db = penalty_db;
  } else if (kind == "fixed") {
    s.kind = ScenarioKind::kFixedMws;
    s.mws_penalty_db = penalty_db;
  } else {
    throw CLI::ValidationError("--scenario must be sws, flex or fixed");
  }
  s.mws_lines = lines;
  s.fsr_ghz = fsr_ghz;
  s.validate();
  return s;
}

// "sws,flex:1,flex:3,fixed:1" -> scenario list
std::vector<Scenario> parse_scenarios(const std::string& text, int lines,
                                      double fsr_ghz) {
  std::vector<Scenario> scenarios;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const auto colon = token.find(':');
    const std::string kind = token.substr(0, colon);
    const double penalty =
        colon == std::string::npos ? 0.0 : std::stod(token.substr(colon + 1));
    scenarios.push_back(make_scenario(kind, penalty, lines, fsr_ghz));
  }
  if (scenarios.empty()) {
    throw CLI::ValidationError("--scenarios parsed to an empty list");
  }
  return scenarios;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical network planning engine comparing single- and "
               "multi-wavelength transponder deployments"};
  app.require_subcommand(1);

  // ---- osnr ----
  auto* osnr_cmd = app.add_subcommand(
      "osnr", "Sweep transmit OSNR of a source/architecture combination");
  std::string scheme = "joint";
  std::string axis = "pline";
  double ocnr = 45.0, p_line = -10.0;
  int lines = 4;
  double from = -20.0, to = 0.0, step = 0.5;
  TxArchitecture arch;
  std::string out_path = "-";
  osnr_cmd->add_option("--scheme", scheme, "sws | joint | perline")
      ->check(CLI::IsMember({"sws", "joint", "perline"}));
  osnr_cmd->add_option("--axis", axis, "sweep axis: pline | ocnr")
      ->check(CLI::IsMember({"pline", "ocnr"}));
  osnr_cmd->add_option("--ocnr", ocnr, "OCNR per line in dB");
  osnr_cmd->add_option("--p-line", p_line, "power per line in dBm");
  osnr_cmd->add_option("--lines", lines, "number of comb lines");
  osnr_cmd->add_option("--from", from, "sweep start");
  osnr_cmd->add_option("--to", to, "sweep end");
  osnr_cmd->add_option("--step", step, "sweep step");
  osnr_cmd->add_option("--ca-cap-dbm", arch.ca_cap_dbm, "comb amplifier output cap");
  osnr_cmd->add_option("--amp-nf-db", arch.amp_nf_db, "amplifier noise figure");
  osnr_cmd->add_option("--demux-loss-db", arch.demux_loss_db, "demux loss");
  osnr_cmd->add_option("--mux-loss-db", arch.mux_loss_db, "mux loss");
  osnr_cmd->add_option("--mod-loss-db", arch.mod_loss_db, "modulation loss");
  osnr_cmd->add_option("--insertion-loss-db", arch.insertion_loss_db,
                       "modulator insertion + other Tx losses");
  osnr_cmd->add_option("--launch-dbm", arch.launch_dbm, "booster launch target");
  osnr_cmd->add_option("-o,--output", out_path, "output CSV path ('-' = stdout)");

  // ---- qot ----
  auto* qot_cmd = app.add_subcommand(
      "qot", "Achieved vs required SNR for one configuration on a span chain");
  int spans = 1;
  double span_km = 80.0, sr = 35.0, osnr_tx_db = 36.0;
  std::string mod_name = "QPSK";
  qot_cmd->add_option("--spans", spans, "number of spans")->required();
  qot_cmd->add_option("--span-km", span_km, "span length in km");
  qot_cmd->add_option("--sr", sr, "symbol rate in GBd")
      ->check(CLI::IsMember({35.0, 70.0, 105.0, 140.0}));
  qot_cmd->add_option("--mod", mod_name, "QPSK | 16QAM | 64QAM");
  qot_cmd->add_option("--osnr-tx", osnr_tx_db, "transmit OSNR in dB");

  // ---- plan ----
  auto* plan_cmd = app.add_subcommand("plan", "Plan a demand file on a topology");
  std::string topo_path, demands_path, scenario_kind = "sws";
  double penalty_db = 0.0, fsr_ghz = 150.0;
  int mws_lines = 4;
  std::string plan_out = "-";
  plan_cmd->add_option("--topology", topo_path, "topology JSON")->required();
  plan_cmd->add_option("--demands", demands_path, "demands CSV")->required();
  plan_cmd->add_option("--scenario", scenario_kind, "sws | flex | fixed");
  plan_cmd->add_option("--penalty-db", penalty_db, "MWS transmit OSNR penalty");
  plan_cmd->add_option("--lines", mws_lines, "MWS line count");
  plan_cmd->add_option("--fsr-ghz", fsr_ghz, "fixed-MWS free spectral range");
  plan_cmd->add_option("-o,--output", plan_out, "plan CSV path ('-' = stdout)");

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Scenario x traffic sweep emitting results.csv and penalty.csv");
  std::string sweep_topo, weights_path, scenarios_text = "sws,flex:1,flex:3,fixed:1";
  double art_min = 0.0, art_max = 0.0, art_step = 0.0, penalty_art = 0.0;
  std::string penalty_grid_text = "0,0.5,1,1.5,2,2.5,3";
  std::string out_dir = ".";
  unsigned seed = 1;
  bool random_weights = false, serial = false;
  sweep_cmd->add_option("--topology", sweep_topo, "topology JSON")->required();
  sweep_cmd->add_option("--weights", weights_path,
                        "optional CSV id,weight overriding node weights");
  sweep_cmd->add_option("--art-min", art_min, "lowest aggregate traffic, Gb/s")
      ->required();
  sweep_cmd->add_option("--art-max", art_max, "highest aggregate traffic, Gb/s")
      ->required();
  sweep_cmd->add_option("--art-step", art_step, "traffic grid step, Gb/s")
      ->required();
  sweep_cmd->add_option("--scenarios", scenarios_text,
                        "comma list of sws | flex:<dB> | fixed:<dB>");
  sweep_cmd->add_option("--penalty-grid", penalty_grid_text,
                        "comma list of flex penalties for the fixed-ART sweep");
  sweep_cmd->add_option("--penalty-art", penalty_art,
                        "ART of the penalty sweep (default: middle grid point)");
  sweep_cmd->add_option("--lines", mws_lines, "MWS line count");
  sweep_cmd->add_option("--fsr-ghz", fsr_ghz, "fixed-MWS free spectral range");
  sweep_cmd->add_option("--seed", seed, "seed for --random-weights");
  sweep_cmd->add_flag("--random-weights", random_weights,
                      "replace node weights by uniform random draws");
  sweep_cmd->add_flag("--serial", serial, "run cells serially (reference mode)");
  sweep_cmd->add_option("-o,--out-dir", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*osnr_cmd) {
      LightSourceSpec source;
      TxArchitecture a = arch;
      if (scheme == "sws") {
        source.kind = SourceKind::kSws;
        source.ocnr_db = ocnr;
        source.p_line_dbm = p_line;
        source.lines = 1;
        a.scheme = AmpScheme::kSwsDirect;
      } else {
        source.kind = SourceKind::kMws;
        source.ocnr_db = ocnr;
        source.p_line_dbm = p_line;
        source.lines = lines;
        a.scheme = scheme == "joint" ? AmpScheme::kJointCa : AmpScheme::kPerLineCa;
      }
      const auto points = sweep_osnr_tx(
          source, a, axis == "pline" ? SweepAxis::kPLine : SweepAxis::kOcnr,
          from, to, step);
      std::string csv = "axis_value,osnr_tx_db,scheme\n";
      for (const auto& p : points) {
        csv += fmt("%.4f", p.axis_value) + ',' + fmt("%.4f", p.osnr_tx_db) +
               ',' + scheme + '\n';
      }
      write_output(out_path, csv);
      return 0;
    }

    if (*qot_cmd) {
      const auto mod = parse_modulation(mod_name);
      if (!mod) throw std::runtime_error("unknown modulation: " + mod_name);
      const TransponderConfig* cfg = nullptr;
      for (const auto& c : config_table()) {
        if (c.modulation == *mod && c.symbol_rate_gbd == sr) cfg = &c;
      }
      if (!cfg) throw std::runtime_error("no such configuration");
      const std::vector<double> chain(static_cast<size_t>(spans), span_km);
      FiberParams fiber;
      LaunchSpec launch;
      const double achieved = path_snr_db(chain, *cfg, launch, fiber, osnr_tx_db);
      std::printf("config          %s\n", cfg->name().c_str());
      std::printf("net rate        %.0f Gb/s\n", cfg->net_rate_gbps);
      std::printf("achieved SNR    %.3f dB\n", achieved);
      std::printf("required SNR    %.3f dB\n", cfg->required_snr_db);
      std::printf("feasible        %s\n",
                  achieved >= cfg->required_snr_db ? "yes" : "no");
      return 0;
    }

    if (*plan_cmd) {
      const auto topo = load_topology(topo_path);
      const auto demands = load_demands(demands_path, topo);
      const auto scenario = make_scenario(scenario_kind, penalty_db, mws_lines, fsr_ghz);
      PlannerParams params;
      params.osnr_tx_sws_db = sws_reference_osnr_db();
      RouteCache routes(topo, params.k, params.fiber, params.launch);
      const auto plan = plan_all(topo, routes, demands, scenario, params);
      write_output(plan_out, plan_csv(topo, demands, plan, scenario));
      return 0;
    }

    if (*sweep_cmd) {
      auto topo = load_topology(sweep_topo);
      if (!weights_path.empty() || random_weights) {
        std::vector<Node> nodes;
        for (int i = 0; i < topo.node_count(); ++i) nodes.push_back(topo.node(i));
        if (random_weights) {
          // xorshift-style LCG; only used when randomized weights are requested
          unsigned state = seed;
          for (auto& n : nodes) {
            state = state * 1664525u + 1013904223u;
            n.weight = 0.5 + 4.5 * (state >> 8) / double(1u << 24);
          }
        } else {
          std::ifstream in(weights_path);
          if (!in) throw std::runtime_error("cannot open " + weights_path);
          std::string line;
          while (std::getline(in, line)) {
            if (line.empty() || line.rfind("id,", 0) == 0) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos) {
              throw std::runtime_error("weights CSV: expected id,weight");
            }
            const std::string id = line.substr(0, comma);
            const int idx = topo.node_index(id);
            if (idx < 0) throw std::runtime_error("weights CSV: unknown node " + id);
            nodes[idx].weight = std::stod(line.substr(comma + 1));
          }
        }
        std::vector<LinkSpec> links;
        for (int i = 0; i < topo.link_count(); ++i) {
          const auto& l = topo.link(i);
          links.push_back({topo.node(l.a).id, topo.node(l.b).id, l.length_km});
        }
        topo = Topology(std::move(nodes), links);
      }

      SweepSpec spec;
      spec.scenarios = parse_scenarios(scenarios_text, mws_lines, fsr_ghz);
      for (double art = art_min; art <= art_max + 1e-6; art += art_step) {
        spec.art_grid_gbps.push_back(art);
      }
      {
        std::istringstream in(penalty_grid_text);
        std::string token;
        while (std::getline(in, token, ',')) {
          if (!token.empty()) spec.penalty_grid_db.push_back(std::stod(token));
        }
      }
      spec.penalty_art_gbps = penalty_art;

      PlannerParams params;
      params.osnr_tx_sws_db = sws_reference_osnr_db();
      RouteCache routes(topo, params.k, params.fiber, params.launch);
      const auto result =
          run_sweep(topo, routes, spec, params,
                    serial ? ExecMode::kSerial : ExecMode::kParallel);
      write_output(out_dir + "/results.csv", results_csv(result));
      write_output(out_dir + "/penalty.csv", penalty_csv(result));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
