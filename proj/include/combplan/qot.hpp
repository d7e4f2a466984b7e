#pragma once

#include <span>
#include <vector>

#include "combplan/transponder.hpp"

namespace combplan {

// Standard SSMF constants; EDFA gain equals span loss (perfect attenuation
// compensation).
struct FiberParams {
  double attenuation_db_per_km = 0.2;
  double beta2_ps2_per_km = -21.3;
  double gamma_per_w_km = 1.3;
  double edfa_nf_db = 5.0;
};

// Constant transmit power spectral density across symbol rates; anchored so
// a 140 GHz carrier launches at 0 dBm.
struct LaunchSpec {
  double psd_dbm_per_ghz = -21.46;

  double channel_power_dbm(double symbol_rate_gbd) const;
  double channel_power_mw(double symbol_rate_gbd) const;
};

inline constexpr double kTotalBandGhz = 4800.0;  // fully loaded C-band
inline constexpr double kFecBerThreshold = 0.035;

// Gray-coded square-QAM bit error rate at per-symbol SNR s (linear).
double qam_ber(double snr_lin, int order);

// Per-symbol SNR (linear) at which qam_ber hits the FEC threshold; bisection
// to 1e-9 relative tolerance.
double fec_limit_snr_lin(int order);

// FEC-threshold SNR in dB plus the implementation penalty of the cell.
double required_snr_db(Modulation m, double symbol_rate_gbd);

// The 12-entry grid with required SNR filled in; computed once.
const std::vector<TransponderConfig>& config_table();

// ASE power per channel added by the EDFA closing one span, in mW.
double span_ase_power_mw(const FiberParams& fiber, double span_km,
                         double width_ghz);

// Nonlinear interference power per channel added by one span, closed-form
// incoherent GN estimate for a fully loaded rectangular spectrum, in mW.
double span_nli_power_mw(const FiberParams& fiber, const LaunchSpec& launch,
                         double span_km, double width_ghz);

// ASE + NLI accumulated over a span list, per GHz of channel width (both
// terms are linear in the channel bandwidth).
double path_noise_mw_per_ghz(const FiberParams& fiber, const LaunchSpec& launch,
                             std::span<const double> spans_km);

// OSNR_TX referred to the signal bandwidth: OSNR + 10*log10(12.5/SR).
double snr_tx_db(double osnr_tx_db, double symbol_rate_gbd);

// 1/SNR = 1/SNR_tx + (sum ASE + sum NLI)/P_ch, incoherent accumulation.
double path_snr_db(std::span<const double> spans_km,
                   const TransponderConfig& config, const LaunchSpec& launch,
                   const FiberParams& fiber, double osnr_tx_db);

// Configs whose achieved SNR on the path meets their threshold, sorted by
// net data rate descending, ties by lower required SNR.
std::vector<TransponderConfig> feasible_configs(std::span<const double> spans_km,
                                                const LaunchSpec& launch,
                                                const FiberParams& fiber,
                                                double osnr_tx_db);

}  // namespace combplan
