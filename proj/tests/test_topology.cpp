#include <doctest.h>

#include <numeric>
#include <random>

#include "combplan/io.hpp"
#include "combplan/topology.hpp"

using namespace combplan;

namespace {

Topology two_node(double length_km = 80.0) {
  return Topology({{"A", 1.0}, {"B", 1.0}}, {{"A", "B", length_km}});
}

}  // namespace

TEST_CASE("split_spans: 80 km spans, equal split") {
  CHECK(split_spans(80.0) == std::vector<double>{80.0});
  CHECK(split_spans(160.0) == std::vector<double>{80.0, 80.0});

  const auto spans420 = split_spans(420.0);
  REQUIRE(spans420.size() == 6);
  for (double s : spans420) CHECK(s == doctest::Approx(70.0));

  const auto spans200 = split_spans(200.0);
  REQUIRE(spans200.size() == 3);
  for (double s : spans200) CHECK(s == doctest::Approx(200.0 / 3.0));
}

TEST_CASE("split_spans: sums to input, no span above 80 km") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> len(0.5, 3000.0);
  for (int i = 0; i < 500; ++i) {
    const double km = len(rng);
    const auto spans = split_spans(km);
    const double sum = std::accumulate(spans.begin(), spans.end(), 0.0);
    CHECK(std::abs(sum - km) < 1e-9);
    for (double s : spans) CHECK(s <= kMaxSpanKm + 1e-12);
  }
  CHECK_THROWS_AS(split_spans(0.0), ValidationError);
}

TEST_CASE("two-node topology: one link, one span") {
  const auto topo = two_node();
  CHECK(topo.node_count() == 2);
  REQUIRE(topo.link_count() == 1);
  REQUIRE(topo.link(0).spans_km.size() == 1);
  CHECK(topo.link(0).spans_km[0] == doctest::Approx(80.0));
}

TEST_CASE("200 km link decomposes into three equal spans") {
  const auto topo = two_node(200.0);
  REQUIRE(topo.link(0).spans_km.size() == 3);
  for (double s : topo.link(0).spans_km) CHECK(s == doctest::Approx(66.6667).epsilon(1e-4));
}

TEST_CASE("topology validation lists offending records") {
  // duplicate link
  CHECK_THROWS_WITH_AS(
      Topology({{"A", 1}, {"B", 1}}, {{"A", "B", 10}, {"B", "A", 20}}),
      doctest::Contains("duplicate link"), ValidationError);
  // self loop
  CHECK_THROWS_WITH_AS(Topology({{"A", 1}, {"B", 1}}, {{"A", "A", 10}, {"A", "B", 10}}),
                       doctest::Contains("self-loop"), ValidationError);
  // non-positive length
  CHECK_THROWS_WITH_AS(Topology({{"A", 1}, {"B", 1}}, {{"A", "B", 0.0}}),
                       doctest::Contains("non-positive length"), ValidationError);
  // disconnected
  CHECK_THROWS_WITH_AS(
      Topology({{"A", 1}, {"B", 1}, {"C", 1}, {"D", 1}},
               {{"A", "B", 10}, {"C", "D", 10}}),
      doctest::Contains("disconnected"), ValidationError);
  // unknown endpoint
  CHECK_THROWS_WITH_AS(Topology({{"A", 1}, {"B", 1}}, {{"A", "X", 10}}),
                       doctest::Contains("unknown endpoint"), ValidationError);
}

TEST_CASE("topology JSON parsing") {
  const char* text = R"({"nodes":[{"id":"A","weight":1},{"id":"B","weight":2}],
                         "links":[{"a":"A","b":"B","length_km":80}]})";
  const auto topo = topology_from_json(text);
  CHECK(topo.node_count() == 2);
  CHECK(topo.node(topo.node_index("B")).weight == doctest::Approx(2.0));

  CHECK_THROWS_AS(topology_from_json("{not json"), ValidationError);
  CHECK_THROWS_AS(topology_from_json(R"({"nodes":[]})"), ValidationError);
  CHECK_THROWS_AS(
      topology_from_json(R"({"nodes":[{"id":"A"}],"links":[{"a":"A","b":"B"}]})"),
      ValidationError);
}

TEST_CASE("bundled Germany-like topology matches the national-scale profile") {
  const auto topo = load_topology("data/germany17.json");
  CHECK(topo.node_count() == 17);
  CHECK(topo.link_count() == 26);
  const double mean_km = topo.mean_shortest_path_km();
  CHECK(mean_km >= 350.0);
  CHECK(mean_km <= 500.0);
}

TEST_CASE("bundled EU-like topology loads at continental scale") {
  const auto topo = load_topology("data/europe28.json");
  CHECK(topo.node_count() == 28);
  CHECK(topo.link_count() == 41);
  CHECK(topo.mean_shortest_path_km() > 2 * 500.0);
}

TEST_CASE("every node pair of a valid topology is connected") {
  const auto topo = load_topology("data/germany17.json");
  CHECK(std::isfinite(topo.mean_shortest_path_km()));
}

TEST_CASE("demands CSV round-trips and rejects malformed records") {
  const auto topo = two_node();
  const auto demands = demands_from_csv("src,dst,gbps\nA,B,400\n", topo);
  REQUIRE(demands.size() == 1);
  CHECK(demands[0].rate_gbps == doctest::Approx(400.0));
  CHECK(demands_to_csv(topo, demands) == "src,dst,gbps\nA,B,400.000\n");

  CHECK_THROWS_AS(demands_from_csv("A,B\n", topo), ValidationError);
  CHECK_THROWS_AS(demands_from_csv("A,X,100\n", topo), ValidationError);
  CHECK_THROWS_AS(demands_from_csv("A,A,100\n", topo), ValidationError);
  CHECK_THROWS_AS(demands_from_csv("A,B,-5\n", topo), ValidationError);
  CHECK_THROWS_AS(demands_from_csv("A,B,12x\n", topo), ValidationError);
}
