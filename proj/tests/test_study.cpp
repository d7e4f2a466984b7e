#include <doctest.h>

#include <cmath>

#include "combplan/io.hpp"
#include "combplan/study.hpp"
#include "combplan/txchain.hpp"

using namespace combplan;

namespace {

PlannerParams default_params() {
  PlannerParams p;
  p.osnr_tx_sws_db = sws_reference_osnr_db();
  return p;
}

PlanOutcome flex_fixture(const std::vector<std::pair<int, int>>& endpoints) {
  PlanOutcome plan;
  for (const auto& [src, dst] : endpoints) {
    Lightpath lp;
    lp.src = src;
    lp.dst = dst;
    lp.source_type = SourceType::kFlexLine;
    plan.lightpaths.push_back(lp);
  }
  return plan;
}

}  // namespace

TEST_CASE("gravity demands: pair products scaled to the aggregate") {
  Topology pair({{"A", 1.0}, {"B", 1.0}}, {{"A", "B", 100.0}});
  const auto single = gravity_demands(pair, 100.0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].rate_gbps == doctest::Approx(100.0));

  Topology tri({{"A", 1.0}, {"B", 1.0}, {"C", 1.0}},
               {{"A", "B", 100.0}, {"B", "C", 100.0}, {"A", "C", 100.0}});
  const auto equal = gravity_demands(tri, 300.0);
  REQUIRE(equal.size() == 3);
  for (const auto& d : equal) CHECK(d.rate_gbps == doctest::Approx(100.0));

  double sum = 0.0;
  for (const auto& d : equal) sum += d.rate_gbps;
  CHECK(sum == doctest::Approx(300.0).epsilon(1e-6));
}

TEST_CASE("gravity demands scale linearly with the aggregate before flooring") {
  const auto topo = load_topology("data/germany17.json");
  const auto base = gravity_demands(topo, 50000.0);
  const auto doubled = gravity_demands(topo, 100000.0);
  REQUIRE(base.size() == doubled.size());
  for (size_t i = 0; i < base.size(); ++i) {
    if (base[i].rate_gbps > 25.0) {  // unfloored region
      CHECK(doubled[i].rate_gbps == doctest::Approx(2.0 * base[i].rate_gbps));
    }
  }
}

TEST_CASE("gravity demands floor micro-demands at 25 Gb/s") {
  Topology tri({{"A", 1.0}, {"B", 1.0}, {"C", 1.0}},
               {{"A", "B", 100.0}, {"B", "C", 100.0}, {"A", "C", 100.0}});
  const auto tiny = gravity_demands(tri, 30.0);
  for (const auto& d : tiny) CHECK(d.rate_gbps == doctest::Approx(25.0));
}

TEST_CASE("gravity demands reject degenerate weights") {
  Topology zero({{"A", 0.0}, {"B", 0.0}}, {{"A", "B", 100.0}});
  CHECK_THROWS_AS(gravity_demands(zero, 100.0), std::invalid_argument);
  Topology one_sided({{"A", 1.0}, {"B", 0.0}}, {{"A", "B", 100.0}});
  CHECK_THROWS_AS(gravity_demands(one_sided, 100.0), std::invalid_argument);
  Topology ok({{"A", 1.0}, {"B", 1.0}}, {{"A", "B", 100.0}});
  CHECK_THROWS_AS(gravity_demands(ok, 0.0), std::invalid_argument);
}

TEST_CASE("laser count: flex lines share a source per 4 lightpaths") {
  Scenario flex;
  flex.kind = ScenarioKind::kFlexMws;
  flex.mws_lines = 4;

  std::vector<std::pair<int, int>> ten_from_one(10, {0, 1});
  CHECK(laser_count(flex_fixture(ten_from_one), flex) == 3);  // ceil(10/4)

  CHECK(laser_count(flex_fixture({{0, 1}}), flex) == 1);

  std::vector<std::pair<int, int>> split;
  for (int i = 0; i < 4; ++i) split.push_back({0, 1});
  for (int i = 0; i < 4; ++i) split.push_back({2, 3});
  CHECK(laser_count(flex_fixture(split), flex) == 2);

  // stricter grouping: lines to different destinations need their own unit
  std::vector<std::pair<int, int>> fan{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK(laser_count(flex_fixture(fan), flex) == 1);
  CHECK(laser_count(flex_fixture(fan), flex, {.group_by_pair = true}) == 4);
}

TEST_CASE("laser count: sws per lightpath, fixed per block plus sws") {
  Scenario sws;
  PlanOutcome plan = flex_fixture({{0, 1}, {0, 2}, {1, 2}});
  for (auto& lp : plan.lightpaths) lp.source_type = SourceType::kSws;
  CHECK(laser_count(plan, sws) == 3);

  Scenario fixed;
  fixed.kind = ScenarioKind::kFixedMws;
  PlanOutcome mixed;
  Lightpath sws_lp;
  sws_lp.source_type = SourceType::kSws;
  mixed.lightpaths.push_back(sws_lp);
  Lightpath line;
  line.source_type = SourceType::kFixedLine;
  mixed.lightpaths.push_back(line);
  mixed.lightpaths.push_back(line);
  mixed.blocks.emplace_back();
  CHECK(laser_count(mixed, fixed) == 2);  // one SWS laser + one block
}

TEST_CASE("cost breakeven follows the laser-share equation") {
  CHECK(cost_breakeven(50, 80, 50, 80) == doctest::Approx(1.0));
  CHECK(cost_breakeven(100, 100, 25, 100) == doctest::Approx(4.0));
  // 70% laser saving with 7% more lightpaths
  CHECK(cost_breakeven(100, 100, 30, 107) == doctest::Approx(2.8596).epsilon(1e-4));
  CHECK_THROWS_AS(cost_breakeven(100, 100, 0, 100), std::domain_error);
}

TEST_CASE("sweep rows are deterministic, ordered, and mode-independent") {
  const auto topo = load_topology("data/germany17.json");
  const auto params = default_params();
  RouteCache routes(topo, params.k, params.fiber, params.launch);

  SweepSpec spec;
  Scenario sws;
  Scenario flex;
  flex.kind = ScenarioKind::kFlexMws;
  flex.mws_penalty_db = 1.0;
  Scenario fixed;
  fixed.kind = ScenarioKind::kFixedMws;
  fixed.mws_penalty_db = 1.0;
  spec.scenarios = {sws, flex, fixed};
  spec.art_grid_gbps = {20000.0, 60000.0, 100000.0};
  spec.penalty_grid_db = {0.0, 1.0, 3.0};

  const auto serial = run_sweep(topo, routes, spec, params, ExecMode::kSerial);
  const auto parallel = run_sweep(topo, routes, spec, params, ExecMode::kParallel);
  CHECK(results_csv(serial) == results_csv(parallel));
  CHECK(penalty_csv(serial) == penalty_csv(parallel));

  const auto again = run_sweep(topo, routes, spec, params, ExecMode::kParallel);
  CHECK(results_csv(parallel) == results_csv(again));

  REQUIRE(serial.rows.size() == 9);
  for (size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].scenario == spec.scenarios[i / 3].label());
    CHECK(serial.rows[i].target_art_gbps ==
          doctest::Approx(spec.art_grid_gbps[i % 3]));
  }

  // plenty of spectrum at the low point: everything served
  CHECK(serial.rows[0].up == doctest::Approx(0.0));
  CHECK(serial.rows[0].served_gbps == doctest::Approx(serial.rows[0].art_gbps));

  // UP is exact bookkeeping
  for (const auto& row : serial.rows) {
    CHECK(row.up ==
          doctest::Approx((row.art_gbps - row.served_gbps) / row.art_gbps));
    CHECK(row.lasers <= row.lightpaths);
    CHECK(row.occupancy >= 0.0);
    CHECK(row.occupancy <= 1.0);
  }
}

TEST_CASE("penalty sweep: zero-penalty flex row equals the SWS baseline") {
  const auto topo = load_topology("data/germany17.json");
  const auto params = default_params();
  RouteCache routes(topo, params.k, params.fiber, params.launch);

  SweepSpec spec;
  Scenario sws;
  spec.scenarios = {sws};
  spec.art_grid_gbps = {60000.0};
  spec.penalty_grid_db = {0.0, 3.0};

  const auto result = run_sweep(topo, routes, spec, params, ExecMode::kSerial);
  REQUIRE(result.penalty_rows.size() == 2);
  CHECK(result.penalty_rows[0].penalty_db == doctest::Approx(0.0));
  CHECK(result.penalty_rows[0].delta_lp_pct == doctest::Approx(0.0));
  CHECK(result.penalty_rows[0].snr_diff_db == doctest::Approx(0.0));
  CHECK(result.penalty_rows[1].delta_lp_pct >= 0.0);
  CHECK(result.penalty_rows[1].snr_diff_db > 0.0);
}

TEST_CASE("sweep validates its grid") {
  const auto topo = load_topology("data/germany17.json");
  const auto params = default_params();
  RouteCache routes(topo, params.k, params.fiber, params.launch);
  SweepSpec spec;
  spec.scenarios = {Scenario{}};
  spec.art_grid_gbps = {100.0, 100.0};
  CHECK_THROWS_AS(run_sweep(topo, routes, spec, params), std::invalid_argument);
  spec.art_grid_gbps.clear();
  CHECK_THROWS_AS(run_sweep(topo, routes, spec, params), std::invalid_argument);
}
