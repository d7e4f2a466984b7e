#include "combplan/transponder.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "combplan/units.hpp"

namespace combplan {

int modulation_order(Modulation m) {
  switch (m) {
    case Modulation::kQpsk: return 4;
    case Modulation::k16Qam: return 16;
    case Modulation::k64Qam: return 64;
  }
  throw std::invalid_argument("unknown modulation");
}

int bits_per_symbol(Modulation m) {
  switch (m) {
    case Modulation::kQpsk: return 2;
    case Modulation::k16Qam: return 4;
    case Modulation::k64Qam: return 6;
  }
  throw std::invalid_argument("unknown modulation");
}

std::string_view modulation_name(Modulation m) {
  switch (m) {
    case Modulation::kQpsk: return "QPSK";
    case Modulation::k16Qam: return "16QAM";
    case Modulation::k64Qam: return "64QAM";
  }
  return "?";
}

std::optional<Modulation> parse_modulation(std::string_view name) {
  if (name == "QPSK" || name == "qpsk") return Modulation::kQpsk;
  if (name == "16QAM" || name == "16qam") return Modulation::k16Qam;
  if (name == "64QAM" || name == "64qam") return Modulation::k64Qam;
  return std::nullopt;
}

double implementation_penalty_db(Modulation m, double symbol_rate_gbd) {
  int sr_idx = -1;
  for (size_t i = 0; i < kSymbolRatesGbd.size(); ++i) {
    if (symbol_rate_gbd == kSymbolRatesGbd[i]) sr_idx = static_cast<int>(i);
  }
  if (sr_idx < 0) {
    throw std::invalid_argument("implementation_penalty_db: unsupported symbol rate");
  }
  // Rows QPSK/16QAM/64QAM, columns 35/70/105/140 GBd.
  static constexpr double kTable[3][4] = {
      {1.0, 1.5, 2.0, 2.5},
      {1.5, 2.0, 2.5, 3.0},
      {2.0, 2.5, 3.0, 3.5},
  };
  int row = 0;
  switch (m) {
    case Modulation::kQpsk: row = 0; break;
    case Modulation::k16Qam: row = 1; break;
    case Modulation::k64Qam: row = 2; break;
  }
  return kTable[row][sr_idx];
}

double channel_width_ghz(double symbol_rate_gbd) {
  return std::ceil(symbol_rate_gbd * 1.05 / kRefBandwidthGhz) * kRefBandwidthGhz;
}

double net_data_rate_gbps(double symbol_rate_gbd, Modulation m) {
  return 100.0 * (symbol_rate_gbd / 35.0) * (bits_per_symbol(m) / 2.0);
}

std::string TransponderConfig::name() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%d", std::string(modulation_name(modulation)).c_str(),
                static_cast<int>(symbol_rate_gbd));
  return buf;
}

std::vector<TransponderConfig> base_config_grid() {
  std::vector<TransponderConfig> grid;
  grid.reserve(kModulations.size() * kSymbolRatesGbd.size());
  for (Modulation m : kModulations) {
    for (double sr : kSymbolRatesGbd) {
      TransponderConfig c;
      c.symbol_rate_gbd = sr;
      c.modulation = m;
      c.penalty_db = implementation_penalty_db(m, sr);
      c.net_rate_gbps = net_data_rate_gbps(sr, m);
      c.width_ghz = channel_width_ghz(sr);
      c.width_slots = static_cast<int>(std::lround(c.width_ghz / kRefBandwidthGhz));
      grid.push_back(c);
    }
  }
  return grid;
}

std::string Scenario::label() const {
  char buf[48];
  switch (kind) {
    case ScenarioKind::kSws:
      return "sws";
    case ScenarioKind::kFlexMws:
      std::snprintf(buf, sizeof(buf), "flex_%.1fdB", mws_penalty_db);
      return buf;
    case ScenarioKind::kFixedMws:
      std::snprintf(buf, sizeof(buf), "fixed_%.1fdB_%.0fGHz", mws_penalty_db, fsr_ghz);
      return buf;
  }
  return "?";
}

void Scenario::validate() const {
  if (mws_penalty_db < 0.0) {
    throw std::invalid_argument("scenario: penalty must be >= 0");
  }
  if (kind != ScenarioKind::kSws && mws_lines < 2) {
    throw std::invalid_argument("scenario: MWS needs at least 2 lines");
  }
  if (kind == ScenarioKind::kFixedMws) {
    double widest = 0.0;
    for (double sr : kSymbolRatesGbd) widest = std::max(widest, channel_width_ghz(sr));
    if (fsr_ghz < widest) {
      throw std::invalid_argument("scenario: FSR narrower than the widest channel");
    }
    const double slots = fsr_ghz / kRefBandwidthGhz;
    if (std::abs(slots - std::round(slots)) > 1e-9) {
      throw std::invalid_argument("scenario: FSR must be a multiple of the slot width");
    }
  }
}

}  // namespace combplan
