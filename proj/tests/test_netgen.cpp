#include "doctest.h"

#include <cmath>
#include <queue>
#include <sstream>

#include "dcagg/netgen.hpp"
#include "test_support.hpp"

using namespace dcagg;

namespace {

Params paper_params(std::uint64_t seed) {
  Params p;
  p.node_count = 200;
  p.area_side = 100;
  p.comm_range = 20;
  p.interference_range = 20;
  p.period_length = 20;
  p.active_slot_count = 2;
  p.channel_count = 3;
  p.rng_seed = seed;
  return p;
}

int bfs_reach(const Network& net) {
  std::vector<bool> seen(net.size(), false);
  std::queue<NodeId> q;
  q.push(kSink);
  seen[kSink] = true;
  int count = 1;
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop();
    for (NodeId v : net.adjacency[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  return count;
}

std::string dump(const Network& net) {
  std::ostringstream os;
  write_topology(os, net);
  return os.str();
}

}  // namespace

TEST_CASE("paper-sized network is connected with 200 nodes") {
  const Network net = generate_network(paper_params(42));
  CHECK(net.size() == 200);
  CHECK(bfs_reach(net) == 200);
}

TEST_CASE("two nodes in a 1 m square share an edge") {
  Params p = paper_params(3);
  p.node_count = 2;
  p.area_side = 1;
  const Network net = generate_network(p);
  CHECK(net.adjacency[0] == std::vector<NodeId>{1});
  CHECK(net.adjacency[1] == std::vector<NodeId>{0});
  const NetworkStats s = network_stats(net);
  CHECK(s.edge_count == 1);
  CHECK(s.max_degree == 1);
  CHECK(s.sink_eccentricity == 1);
}

TEST_CASE("generation is deterministic per seed") {
  const Network a = generate_network(paper_params(42));
  const Network b = generate_network(paper_params(42));
  CHECK(a == b);
  CHECK(dump(a) == dump(b));
  CHECK_FALSE(dump(a) == dump(generate_network(paper_params(43))));
}

TEST_CASE("generated networks keep their structural invariants") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Params p = paper_params(seed);
    p.node_count = 50 + static_cast<int>(seed % 4) * 100;
    p.period_length = 10 + static_cast<int>(seed % 7) * 10;
    p.active_slot_count = 1 + static_cast<int>(seed % 7);
    const Network net = generate_network(p);
    REQUIRE(bfs_reach(net) == net.size());
    for (NodeId u = 0; u < net.size(); ++u) {
      REQUIRE(static_cast<int>(net.duty_cycles[u].active_slots().size()) == p.active_slot_count);
      for (NodeId v : net.adjacency[u]) {
        REQUIRE(v != u);
        const auto& back = net.adjacency[v];
        REQUIRE(std::binary_search(back.begin(), back.end(), u));
      }
      const auto& pos = net.positions[u];
      REQUIRE(pos.x >= 0.0);
      REQUIRE(pos.x < p.area_side);
      REQUIRE(pos.y >= 0.0);
      REQUIRE(pos.y < p.area_side);
    }
  }
}

TEST_CASE("network_stats agrees with a pairwise distance scan") {
  const Network net = generate_network(paper_params(11));
  int edges = 0;
  std::vector<int> degree(net.size(), 0);
  for (NodeId u = 0; u < net.size(); ++u)
    for (NodeId v = u + 1; v < net.size(); ++v) {
      const double dx = net.positions[u].x - net.positions[v].x;
      const double dy = net.positions[u].y - net.positions[v].y;
      if (std::sqrt(dx * dx + dy * dy) <= net.params.comm_range) {
        ++edges;
        ++degree[u];
        ++degree[v];
      }
    }
  const auto hops = testing::dijkstra_hops(net);
  const NetworkStats s = network_stats(net);
  CHECK(s.node_count == 200);
  CHECK(s.edge_count == edges);
  CHECK(s.max_degree == *std::max_element(degree.begin(), degree.end()));
  CHECK(s.sink_eccentricity == *std::max_element(hops.begin(), hops.end()));
}

TEST_CASE("network_stats on a five-leaf star") {
  // Leaves 72 degrees apart on a radius-10 circle are 11.76 m from each other.
  std::vector<Point> pos{{50, 50}};
  for (int k = 0; k < 5; ++k) {
    const double a = 2.0 * M_PI * k / 5.0;
    pos.push_back({50 + 10 * std::cos(a), 50 + 10 * std::sin(a)});
  }
  const Network net = testing::make_network(pos, {{0}, {1}, {2}, {3}, {4}, {5}}, 10, 1, 10.5, 10.5);
  const NetworkStats s = network_stats(net);
  CHECK(s.edge_count == 5);
  CHECK(s.max_degree == 5);
  CHECK(s.sink_eccentricity == 1);
}

TEST_CASE("infeasible density raises a generation error naming the params") {
  Params p = paper_params(1);
  p.node_count = 30;
  p.area_side = 1000;
  p.comm_range = 5;
  p.interference_range = 5;
  try {
    generate_network(p);
    FAIL("expected GenerationError");
  } catch (const GenerationError& e) {
    CHECK(std::string(e.what()).find("N=30") != std::string::npos);
  }
}

TEST_CASE("fixed sink placements") {
  Params p = paper_params(5);
  p.sink_placement = SinkPlacement::kCenter;
  CHECK(generate_network(p).positions[0] == Point{50, 50});
  p.sink_placement = SinkPlacement::kCorner;
  CHECK(generate_network(p).positions[0] == Point{0, 0});
}

TEST_CASE("topology text round-trips exactly") {
  const Network net = generate_network(paper_params(9));
  std::istringstream in(dump(net));
  const Network back = read_topology(in);
  CHECK(back == net);
  CHECK(dump(back) == dump(net));
}

TEST_CASE("topology reader rejects malformed input") {
  std::istringstream short_header("3 10 1 1 20 20 100");
  CHECK_THROWS_AS(read_topology(short_header), std::invalid_argument);
  std::istringstream bad_slot("2 10 1 1 20 20 100 1\n0 0 0 10\n1 1 1 3\n0 1\n");
  CHECK_THROWS_AS(read_topology(bad_slot), std::invalid_argument);
  std::istringstream wrong_alpha("2 10 2 1 20 20 100 1\n0 0 0 1\n1 1 1 3,4\n0 1\n");
  CHECK_THROWS_AS(read_topology(wrong_alpha), std::invalid_argument);
  std::istringstream self_loop("2 10 1 1 20 20 100 1\n0 0 0 1\n1 1 1 3\n1 1\n");
  CHECK_THROWS_AS(read_topology(self_loop), std::invalid_argument);
}

TEST_CASE("Rng::below stays in range and covers it") {
  Rng rng(123);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.below(7);
    REQUIRE(x < 7);
    ++hits[x];
  }
  for (int h : hits) CHECK(h > 800);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}
