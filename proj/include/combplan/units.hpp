#pragma once

#include <cmath>
#include <stdexcept>

namespace combplan {

// Power in dBm, ratios (OSNR, OCNR, SNR, NF, gain, loss) in dB, frequencies
// in GHz, distances in km, data rates in Gb/s. OSNR/OCNR values are stated
// in the 12.5 GHz (0.1 nm) reference bandwidth.

inline constexpr double kPlanckJs = 6.62607015e-34;
inline constexpr double kRefFrequencyHz = 193.414e12;
inline constexpr double kRefBandwidthGhz = 12.5;

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

inline double lin_to_db(double lin) {
  if (!(lin > 0.0)) {
    throw std::domain_error("lin_to_db: input must be positive");
  }
  return 10.0 * std::log10(lin);
}

inline double dbm_to_mw(double dbm) { return db_to_lin(dbm); }
inline double mw_to_dbm(double mw) { return lin_to_db(mw); }

// h*nu*B_ref in dBm (~ -57.95): the ASE floor every amplifier OSNR
// contribution is referenced against.
inline double ase_floor_dbm() {
  return mw_to_dbm(kPlanckJs * kRefFrequencyHz * (kRefBandwidthGhz * 1e9) * 1e3);
}

}  // namespace combplan
