#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace combplan {

enum class Modulation { kQpsk, k16Qam, k64Qam };

int modulation_order(Modulation m);        // 4, 16, 64
int bits_per_symbol(Modulation m);         // 2, 4, 6
std::string_view modulation_name(Modulation m);
std::optional<Modulation> parse_modulation(std::string_view name);

inline constexpr std::array<double, 4> kSymbolRatesGbd{35.0, 70.0, 105.0, 140.0};
inline constexpr std::array<Modulation, 3> kModulations{
    Modulation::kQpsk, Modulation::k16Qam, Modulation::k64Qam};

// Implementation penalty in dB for (modulation, symbol rate), from
// commercial transponder specifications.
double implementation_penalty_db(Modulation m, double symbol_rate_gbd);

// ceil(SR * 1.05 / 12.5) * 12.5: 5% roll-off guard, whole slots.
double channel_width_ghz(double symbol_rate_gbd);

// Dual-polarization scaling with fixed FEC overhead:
// 100 Gb/s * (SR/35) * (bits_per_symbol/2).
double net_data_rate_gbps(double symbol_rate_gbd, Modulation m);

struct TransponderConfig {
  double symbol_rate_gbd = 0.0;
  Modulation modulation = Modulation::kQpsk;
  double penalty_db = 0.0;
  double net_rate_gbps = 0.0;
  double width_ghz = 0.0;
  int width_slots = 0;
  double required_snr_db = 0.0;

  std::string name() const;  // e.g. "16QAM-70"
};

// The 12-entry (modulation x symbol rate) grid with required SNR unset.
std::vector<TransponderConfig> base_config_grid();

struct Demand {
  int src = -1;
  int dst = -1;
  double rate_gbps = 0.0;
};

enum class ScenarioKind { kSws, kFlexMws, kFixedMws };

struct Scenario {
  ScenarioKind kind = ScenarioKind::kSws;
  double mws_penalty_db = 0.0;  // OSNR_TX penalty applied to MWS sources
  int mws_lines = 4;
  double fsr_ghz = 150.0;       // fixed-MWS line spacing

  std::string label() const;
  void validate() const;
};

}  // namespace combplan
