#pragma once

#include <span>
#include <vector>

namespace combplan {

enum class SourceKind { kSws, kMws };

struct LightSourceSpec {
  SourceKind kind = SourceKind::kSws;
  double ocnr_db = 55.0;     // per line, 12.5 GHz reference
  double p_line_dbm = 16.0;  // per line
  int lines = 1;             // 1 for SWS; MWS default 4
  double fsr_ghz = 0.0;      // MWS only; 0 means flexible
};

// Joint: one comb amplifier for all lines, output capped in total.
// PerLine: one comb amplifier per line, cap applies per line.
// SwsDirect: laser straight into the modulator, no comb amplifier.
enum class AmpScheme { kSwsDirect, kJointCa, kPerLineCa };

struct TxArchitecture {
  AmpScheme scheme = AmpScheme::kSwsDirect;
  double ca_cap_dbm = 26.0;        // comb amplifier output cap (total)
  double amp_nf_db = 5.0;
  double demux_loss_db = 5.0;
  double mux_loss_db = 5.0;
  double mod_loss_db = 5.0;
  double insertion_loss_db = 23.0;  // modulator insertion + other Tx losses
  double launch_dbm = 0.0;          // booster output per carrier
};

// OSNR contribution of one amplifier stage fed at p_in per carrier:
// p_in - NF + 57.95 (the ASE floor constant over 12.5 GHz at 193.414 THz).
double amp_osnr_db(double p_in_dbm, double nf_db);

struct ChainStage {
  enum class Kind { kLoss, kAmp };
  Kind kind = Kind::kLoss;
  double loss_db = 0.0;        // kLoss
  double target_out_dbm = 0.0; // kAmp: output power per carrier
  double nf_db = 0.0;          // kAmp
};

struct OsnrTxResult {
  double osnr_db = 0.0;
  std::vector<double> stage_osnr_db;  // one entry per amplifier stage
  bool unrealistic_gain = false;      // some stage needed > 40 dB of gain
};

// Inverse-linear combination of the source OCNR with every amplifier
// stage's OSNR contribution along the chain.
OsnrTxResult evaluate_chain(double ocnr_db, double p_start_dbm,
                            std::span<const ChainStage> stages);

std::vector<ChainStage> build_chain(const LightSourceSpec& source,
                                    const TxArchitecture& arch);

OsnrTxResult osnr_tx(const LightSourceSpec& source, const TxArchitecture& arch);

// The SWS anchor: OCNR 55 dB, P_line 16 dBm through the direct chain.
double sws_reference_osnr_db(const TxArchitecture& arch = {});

enum class SweepAxis { kPLine, kOcnr };

struct SweepPoint {
  double axis_value = 0.0;
  double osnr_tx_db = 0.0;
  bool unrealistic_gain = false;
};

std::vector<SweepPoint> sweep_osnr_tx(LightSourceSpec source,
                                      const TxArchitecture& arch,
                                      SweepAxis axis, double lo, double hi,
                                      double step);

}  // namespace combplan
