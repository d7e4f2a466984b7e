#include "combplan/qot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "combplan/units.hpp"

namespace combplan {

double LaunchSpec::channel_power_dbm(double symbol_rate_gbd) const {
  return psd_dbm_per_ghz + lin_to_db(symbol_rate_gbd);
}

double LaunchSpec::channel_power_mw(double symbol_rate_gbd) const {
  return dbm_to_mw(channel_power_dbm(symbol_rate_gbd));
}

namespace {

double q_function(double x) {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

}  // namespace

double qam_ber(double snr_lin, int order) {
  if (order != 4 && order != 16 && order != 64) {
    throw std::invalid_argument("qam_ber: unsupported modulation order");
  }
  const double k = std::log2(static_cast<double>(order));
  const double coeff = (4.0 / k) * (1.0 - 1.0 / std::sqrt(static_cast<double>(order)));
  return coeff * q_function(std::sqrt(3.0 * snr_lin / (order - 1)));
}

double fec_limit_snr_lin(int order) {
  // qam_ber is strictly decreasing in snr; bracket and bisect.
  double lo = 1e-6, hi = 1e6;
  for (int i = 0; i < 200 && (hi - lo) > 1e-9 * lo; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (qam_ber(mid, order) > kFecBerThreshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double required_snr_db(Modulation m, double symbol_rate_gbd) {
  return lin_to_db(fec_limit_snr_lin(modulation_order(m))) +
         implementation_penalty_db(m, symbol_rate_gbd);
}

const std::vector<TransponderConfig>& config_table() {
  static const std::vector<TransponderConfig> table = [] {
    auto grid = base_config_grid();
    for (auto& c : grid) {
      c.required_snr_db = required_snr_db(c.modulation, c.symbol_rate_gbd);
    }
    return grid;
  }();
  return table;
}

double span_ase_power_mw(const FiberParams& fiber, double span_km,
                         double width_ghz) {
  if (span_km < 0.0) throw std::invalid_argument("span_ase_power_mw: negative span");
  const double gain_lin = db_to_lin(fiber.attenuation_db_per_km * span_km);
  return db_to_lin(fiber.edfa_nf_db) * kPlanckJs * kRefFrequencyHz *
         (gain_lin - 1.0) * (width_ghz * 1e9) * 1e3;
}

double span_nli_power_mw(const FiberParams& fiber, const LaunchSpec& launch,
                         double span_km, double width_ghz) {
  const double beta2 = std::abs(fiber.beta2_ps2_per_km) * 1e-24;  // s^2/km
  if (beta2 <= 0.0) {
    throw std::domain_error("span_nli_power_mw: zero dispersion");
  }
  // 2*alpha: power attenuation coefficient in 1/km.
  const double two_alpha = fiber.attenuation_db_per_km * std::numbers::ln10 / 10.0;
  const double l_eff = (1.0 - std::exp(-two_alpha * span_km)) / two_alpha;
  const double l_eff_a = 1.0 / two_alpha;
  const double psd_w_per_hz = dbm_to_mw(launch.psd_dbm_per_ghz) * 1e-3 / 1e9;
  const double band_hz = kTotalBandGhz * 1e9;
  const double arg = (std::numbers::pi * std::numbers::pi / 2.0) * beta2 *
                     l_eff_a * band_hz * band_hz;
  const double g_nli = (8.0 / 27.0) * fiber.gamma_per_w_km * fiber.gamma_per_w_km *
                       l_eff * l_eff * psd_w_per_hz * psd_w_per_hz * psd_w_per_hz *
                       std::asinh(arg) / (std::numbers::pi * beta2 * l_eff_a);
  return g_nli * (width_ghz * 1e9) * 1e3;
}

double path_noise_mw_per_ghz(const FiberParams& fiber, const LaunchSpec& launch,
                             std::span<const double> spans_km) {
  double per_ghz = 0.0;
  for (double span : spans_km) {
    per_ghz += span_ase_power_mw(fiber, span, 1.0) +
               span_nli_power_mw(fiber, launch, span, 1.0);
  }
  return per_ghz;
}

double snr_tx_db(double osnr_tx_db, double symbol_rate_gbd) {
  return osnr_tx_db + lin_to_db(kRefBandwidthGhz / symbol_rate_gbd);
}

double path_snr_db(std::span<const double> spans_km,
                   const TransponderConfig& config, const LaunchSpec& launch,
                   const FiberParams& fiber, double osnr_tx_db) {
  const double noise_mw =
      path_noise_mw_per_ghz(fiber, launch, spans_km) * config.width_ghz;
  const double p_ch_mw = launch.channel_power_mw(config.symbol_rate_gbd);
  const double inv = 1.0 / db_to_lin(snr_tx_db(osnr_tx_db, config.symbol_rate_gbd)) +
                     noise_mw / p_ch_mw;
  return lin_to_db(1.0 / inv);
}

std::vector<TransponderConfig> feasible_configs(std::span<const double> spans_km,
                                                const LaunchSpec& launch,
                                                const FiberParams& fiber,
                                                double osnr_tx_db) {
  const double noise_per_ghz = path_noise_mw_per_ghz(fiber, launch, spans_km);
  std::vector<TransponderConfig> feasible;
  for (const auto& c : config_table()) {
    const double inv = 1.0 / db_to_lin(snr_tx_db(osnr_tx_db, c.symbol_rate_gbd)) +
                       noise_per_ghz * c.width_ghz /
                           launch.channel_power_mw(c.symbol_rate_gbd);
    if (lin_to_db(1.0 / inv) >= c.required_snr_db) {
      feasible.push_back(c);
    }
  }
  std::sort(feasible.begin(), feasible.end(), [](const auto& a, const auto& b) {
    if (a.net_rate_gbps != b.net_rate_gbps) return a.net_rate_gbps > b.net_rate_gbps;
    return a.required_snr_db < b.required_snr_db;
  });
  return feasible;
}

}  // namespace combplan
