#include "combplan/txchain.hpp"

#include <stdexcept>

#include "combplan/units.hpp"

namespace combplan {

namespace {
constexpr double kMaxRealisticGainDb = 40.0;
}

double amp_osnr_db(double p_in_dbm, double nf_db) {
  return p_in_dbm - nf_db - ase_floor_dbm();
}

OsnrTxResult evaluate_chain(double ocnr_db, double p_start_dbm,
                            std::span<const ChainStage> stages) {
  OsnrTxResult result;
  double p = p_start_dbm;
  double inv_sum = 1.0 / db_to_lin(ocnr_db);
  for (const ChainStage& stage : stages) {
    if (stage.kind == ChainStage::Kind::kLoss) {
      p -= stage.loss_db;
      continue;
    }
    if (stage.target_out_dbm - p > kMaxRealisticGainDb) {
      result.unrealistic_gain = true;
    }
    const double stage_osnr = amp_osnr_db(p, stage.nf_db);
    result.stage_osnr_db.push_back(stage_osnr);
    inv_sum += 1.0 / db_to_lin(stage_osnr);
    p = stage.target_out_dbm;
  }
  result.osnr_db = lin_to_db(1.0 / inv_sum);
  return result;
}

std::vector<ChainStage> build_chain(const LightSourceSpec& source,
                                    const TxArchitecture& arch) {
  if (source.lines < 1) {
    throw std::invalid_argument("light source: line count must be >= 1");
  }
  if (source.kind == SourceKind::kSws && source.lines != 1) {
    throw std::invalid_argument("light source: SWS has exactly one line");
  }

  std::vector<ChainStage> stages;
  auto loss = [&](double db) {
    stages.push_back({ChainStage::Kind::kLoss, db, 0.0, 0.0});
  };
  auto amp = [&](double target_dbm) {
    stages.push_back({ChainStage::Kind::kAmp, 0.0, target_dbm, arch.amp_nf_db});
  };

  if (arch.scheme != AmpScheme::kSwsDirect) {
    // Comb amplifier runs at its cap; for joint amplification the cap is
    // shared over all lines.
    double ca_out_per_line = arch.ca_cap_dbm;
    if (arch.scheme == AmpScheme::kJointCa) {
      ca_out_per_line -= lin_to_db(static_cast<double>(source.lines));
    }
    amp(ca_out_per_line);
    loss(arch.demux_loss_db);
  }
  loss(arch.mod_loss_db);
  loss(arch.insertion_loss_db);
  loss(arch.mux_loss_db);
  amp(arch.launch_dbm);  // booster restores the launch target
  return stages;
}

OsnrTxResult osnr_tx(const LightSourceSpec& source, const TxArchitecture& arch) {
  const auto stages = build_chain(source, arch);
  return evaluate_chain(source.ocnr_db, source.p_line_dbm, stages);
}

double sws_reference_osnr_db(const TxArchitecture& arch) {
  TxArchitecture direct = arch;
  direct.scheme = AmpScheme::kSwsDirect;
  LightSourceSpec sws;
  sws.kind = SourceKind::kSws;
  sws.ocnr_db = 55.0;
  sws.p_line_dbm = 16.0;
  sws.lines = 1;
  return osnr_tx(sws, direct).osnr_db;
}

std::vector<SweepPoint> sweep_osnr_tx(LightSourceSpec source,
                                      const TxArchitecture& arch,
                                      SweepAxis axis, double lo, double hi,
                                      double step) {
  if (!(step > 0.0) || hi < lo) {
    throw std::invalid_argument("sweep_osnr_tx: empty or invalid range");
  }
  std::vector<SweepPoint> points;
  const int n = static_cast<int>((hi - lo) / step + 1e-9) + 1;
  points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double v = lo + i * step;
    if (axis == SweepAxis::kPLine) {
      source.p_line_dbm = v;
    } else {
      source.ocnr_db = v;
    }
    const auto r = osnr_tx(source, arch);
    points.push_back({v, r.osnr_db, r.unrealistic_gain});
  }
  return points;
}

}  // namespace combplan
