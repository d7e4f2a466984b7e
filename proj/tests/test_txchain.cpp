#include <doctest.h>

#include <algorithm>
#include <random>

#include "combplan/txchain.hpp"
#include "combplan/units.hpp"

using namespace combplan;

namespace {

LightSourceSpec mws(double ocnr_db, double p_line_dbm, int lines = 4) {
  return {SourceKind::kMws, ocnr_db, p_line_dbm, lines, 0.0};
}

TxArchitecture with_scheme(AmpScheme scheme) {
  TxArchitecture arch;
  arch.scheme = scheme;
  return arch;
}

}  // namespace

TEST_CASE("amp_osnr: EDFA OSNR contribution from per-carrier input power") {
  CHECK(amp_osnr_db(-17.0, 5.0) == doctest::Approx(35.95).epsilon(2e-4));
  CHECK(amp_osnr_db(-10.0, 5.0) == doctest::Approx(42.95).epsilon(2e-4));
  // signal at the ASE floor with an ideal amplifier: OSNR of one
  CHECK(amp_osnr_db(ase_floor_dbm(), 0.0) == doctest::Approx(0.0));
}

TEST_CASE("SWS reference chain lands at the ~36 dB anchor") {
  // 16 dBm - (5+23+5) = -17 dBm into the booster, 35.95 dB stage OSNR,
  // combined with the 55 dB OCNR: 35.8997 dB (independent evaluation).
  const double anchor = sws_reference_osnr_db();
  CHECK(anchor == doctest::Approx(35.8997).epsilon(1e-4));
  CHECK(std::abs(anchor - 36.0) <= 0.3);
}

TEST_CASE("joint-CA chain reproduces the -14 dBm / 40 dB operating points") {
  const auto arch = with_scheme(AmpScheme::kJointCa);
  // frozen from the independent straight-line chain evaluation
  const double at_min_power = osnr_tx(mws(45.0, -14.0), arch).osnr_db;
  CHECK(at_min_power == doctest::Approx(33.1874).epsilon(1e-4));
  CHECK(std::abs(at_min_power - 33.0) <= 0.3);
  CHECK(sws_reference_osnr_db() - at_min_power <= 3.0);

  const double at_min_ocnr = osnr_tx(mws(40.0, -10.0), arch).osnr_db;
  CHECK(at_min_ocnr == doctest::Approx(33.2623).epsilon(1e-4));
  CHECK(std::abs(at_min_ocnr - 33.0) <= 0.3);
  CHECK(sws_reference_osnr_db() - at_min_ocnr <= 3.0);
}

TEST_CASE("per-line CA beats joint CA whenever the shared cap binds") {
  for (double p_line : {-20.0, -14.0, -10.0, -5.0}) {
    for (double ocnr : {35.0, 45.0, 55.0}) {
      const double joint =
          osnr_tx(mws(ocnr, p_line), with_scheme(AmpScheme::kJointCa)).osnr_db;
      const double per_line =
          osnr_tx(mws(ocnr, p_line), with_scheme(AmpScheme::kPerLineCa)).osnr_db;
      CHECK(per_line > joint);  // cap is shared over 4 lines, so it binds
    }
  }
  // single line: the cap does not bind and the schemes coincide
  const double joint1 =
      osnr_tx(mws(45.0, -10.0, 1), with_scheme(AmpScheme::kJointCa)).osnr_db;
  const double per_line1 =
      osnr_tx(mws(45.0, -10.0, 1), with_scheme(AmpScheme::kPerLineCa)).osnr_db;
  CHECK(joint1 == doctest::Approx(per_line1).epsilon(1e-12));
}

TEST_CASE("MWS chain without a comb amplifier degenerates to the SWS chain") {
  LightSourceSpec source = mws(55.0, 16.0, 1);
  const auto direct = with_scheme(AmpScheme::kSwsDirect);
  const auto via_mws_source = osnr_tx(source, direct).osnr_db;
  CHECK(via_mws_source == doctest::Approx(sws_reference_osnr_db()).epsilon(1e-12));
}

TEST_CASE("a lossless stage leaves the result unchanged") {
  LightSourceSpec source = mws(45.0, -12.0);
  const auto arch = with_scheme(AmpScheme::kJointCa);
  auto stages = build_chain(source, arch);
  const double before = evaluate_chain(source.ocnr_db, source.p_line_dbm, stages).osnr_db;
  stages.insert(stages.begin() + 1, ChainStage{ChainStage::Kind::kLoss, 0.0, 0.0, 0.0});
  const double after = evaluate_chain(source.ocnr_db, source.p_line_dbm, stages).osnr_db;
  CHECK(before == doctest::Approx(after).epsilon(1e-15));
}

TEST_CASE("cascade dominance: output never beats OCNR or any stage") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ocnr_dist(30.0, 60.0);
  std::uniform_real_distribution<double> p_dist(-25.0, 16.0);
  for (int i = 0; i < 200; ++i) {
    for (AmpScheme scheme :
         {AmpScheme::kSwsDirect, AmpScheme::kJointCa, AmpScheme::kPerLineCa}) {
      LightSourceSpec src;
      if (scheme == AmpScheme::kSwsDirect) {
        src = {SourceKind::kSws, ocnr_dist(rng), p_dist(rng), 1, 0.0};
      } else {
        src = mws(ocnr_dist(rng), p_dist(rng));
      }
      const auto r = osnr_tx(src, with_scheme(scheme));
      CHECK(r.osnr_db <= src.ocnr_db + 1e-12);
      for (double st : r.stage_osnr_db) CHECK(r.osnr_db <= st + 1e-12);
    }
  }
}

TEST_CASE("sweeps are monotone in P_line and OCNR") {
  const auto arch = with_scheme(AmpScheme::kJointCa);
  const auto by_power =
      sweep_osnr_tx(mws(45.0, 0.0), arch, SweepAxis::kPLine, -24.0, -6.0, 0.5);
  for (size_t i = 1; i < by_power.size(); ++i) {
    CHECK(by_power[i].osnr_tx_db >= by_power[i - 1].osnr_tx_db - 1e-12);
  }
  const auto by_ocnr =
      sweep_osnr_tx(mws(0.0, -10.0), arch, SweepAxis::kOcnr, 30.0, 55.0, 0.5);
  for (size_t i = 1; i < by_ocnr.size(); ++i) {
    CHECK(by_ocnr[i].osnr_tx_db >= by_ocnr[i - 1].osnr_tx_db - 1e-12);
  }
}

TEST_CASE("OCNR sweep saturates toward the architecture-limited ceiling") {
  const auto arch = with_scheme(AmpScheme::kJointCa);
  const auto pts =
      sweep_osnr_tx(mws(0.0, -10.0), arch, SweepAxis::kOcnr, 30.0, 55.0, 0.5);
  const double first_slope = pts[1].osnr_tx_db - pts[0].osnr_tx_db;
  const double last_slope = pts.back().osnr_tx_db - pts[pts.size() - 2].osnr_tx_db;
  CHECK(last_slope < 0.1 * first_slope);
  CHECK(last_slope < 0.01);  // flat tail
}

TEST_CASE("single-point sweep equals the direct evaluation") {
  const auto arch = with_scheme(AmpScheme::kPerLineCa);
  const auto pts =
      sweep_osnr_tx(mws(45.0, -14.0), arch, SweepAxis::kPLine, -14.0, -14.0, 1.0);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].osnr_tx_db ==
        doctest::Approx(osnr_tx(mws(45.0, -14.0), arch).osnr_db).epsilon(1e-15));
}

TEST_CASE("sweep rejects empty or inverted ranges") {
  const auto arch = with_scheme(AmpScheme::kJointCa);
  CHECK_THROWS_AS(sweep_osnr_tx(mws(45, -10), arch, SweepAxis::kOcnr, 40, 30, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_osnr_tx(mws(45, -10), arch, SweepAxis::kOcnr, 30, 40, 0),
                  std::invalid_argument);
}

TEST_CASE("very low line power flags an unrealistic gain requirement") {
  const auto weak = osnr_tx(mws(45.0, -30.0), with_scheme(AmpScheme::kJointCa));
  CHECK(weak.unrealistic_gain);
  const auto normal = osnr_tx(mws(45.0, -10.0), with_scheme(AmpScheme::kJointCa));
  CHECK_FALSE(normal.unrealistic_gain);
}
