#include "doctest.h"

#include <sstream>

#include "dcagg/netgen.hpp"
#include "dcagg/tree.hpp"
#include "test_support.hpp"

using namespace dcagg;
using testing::make_network;

namespace {

Network random_network(std::uint64_t seed, int nodes) {
  Params p;
  p.node_count = nodes;
  p.period_length = 10 + static_cast<int>(seed % 7) * 10;
  p.active_slot_count = 1 + static_cast<int>(seed % 7);
  p.rng_seed = seed;
  return generate_network(p);
}

}  // namespace

TEST_CASE("layers of tiny networks") {
  const Network edge = make_network({{0, 0}, {5, 0}}, {{1}, {2}}, 10);
  const Layering a = compute_layers(edge);
  CHECK(a.layers == std::vector<std::vector<NodeId>>{{0}, {1}});

  const Network path = make_network({{0, 0}, {15, 0}, {30, 0}}, {{1}, {2}, {3}}, 10);
  const Layering b = compute_layers(path);
  CHECK(b.layer_of[2] == 2);
  CHECK(b.height() == 2);
}

TEST_CASE("layering matches a unit-weight Dijkstra") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Network net = random_network(seed, 200);
    const Layering lay = compute_layers(net);
    const auto hops = testing::dijkstra_hops(net);
    REQUIRE(lay.layer_of == hops);
    REQUIRE(lay.layers[0] == std::vector<NodeId>{kSink});
    int total = 0;
    for (int i = 0; i <= lay.height(); ++i) {
      total += static_cast<int>(lay.layers[i].size());
      for (NodeId u : lay.layers[i]) REQUIRE(lay.layer_of[u] == i);
    }
    REQUIRE(total == net.size());
  }
}

TEST_CASE("DDAS parent choice") {
  // Sink 0; nodes 1 and 2 in layer 1; node 3 neighbors both but not the sink.
  // min delay from {0} to {3} is 3, to {1} is 1.
  const Network net =
      make_network({{0, 0}, {15, 0}, {0, 15}, {15, 15}}, {{5}, {3}, {1}, {0}}, 10);
  const Layering lay = compute_layers(net);
  REQUIRE(lay.layer_of[3] == 2);
  const AggregationTree ddas = build_ddas_tree(net, lay);
  CHECK(ddas.parent[1] == kSink);
  CHECK(ddas.parent[2] == kSink);
  CHECK(ddas.parent[3] == 2);
  CHECK(ddas.children[kSink] == std::vector<NodeId>{1, 2});
  CHECK(build_spt_tree(net, lay).parent[3] == 1);

  // Equal delays resolve to the smaller id.
  const Network tie =
      make_network({{0, 0}, {15, 0}, {0, 15}, {15, 15}}, {{5}, {4}, {4}, {0}}, 10);
  CHECK(build_ddas_tree(tie, compute_layers(tie)).parent[3] == 1);
}

TEST_CASE("SPT picks the smallest-id upper neighbor") {
  // Node 5 sits next to layer-1 nodes 3 and 7 only; 7 has the better wake slot.
  std::vector<Point> pos(8);
  pos[0] = {0, 0};
  pos[1] = {-10, 0};
  pos[2] = {0, -10};
  pos[3] = {15, 0};
  pos[4] = {-10, -10};
  pos[5] = {15, 15};
  pos[6] = {-5, 5};
  pos[7] = {0, 15};
  const Network net = make_network(pos, {{0}, {0}, {0}, {9}, {0}, {0}, {0}, {1}}, 10);
  const Layering lay = compute_layers(net);
  REQUIRE(lay.layer_of[5] == 2);
  CHECK(build_spt_tree(net, lay).parent[5] == 3);
  CHECK(build_ddas_tree(net, lay).parent[5] == 7);
}

TEST_CASE("path network has a unique tree") {
  const Network path = make_network({{0, 0}, {15, 0}, {30, 0}, {45, 0}}, {{1}, {2}, {3}, {4}}, 10);
  const Layering lay = compute_layers(path);
  for (auto method : {TreeMethod::kDdas, TreeMethod::kSpt}) {
    const AggregationTree t = build_tree(path, lay, method);
    CHECK(t.parent == std::vector<NodeId>{kNoNode, 0, 1, 2});
  }
}

TEST_CASE("DDAS parents attain the neighbor-scan minimum") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Network net = random_network(seed, 50);
    const Layering lay = compute_layers(net);
    const AggregationTree tree = build_ddas_tree(net, lay);
    REQUIRE(check_tree(net, lay, tree).empty());
    const int period = net.params.period_length;
    for (NodeId u = 1; u < net.size(); ++u) {
      NodeId best = kNoNode;
      int best_delay = 0;
      for (NodeId w = 0; w < net.size(); ++w) {
        if (lay.layer_of[w] != lay.layer_of[u] - 1) continue;
        if (net.distance(u, w) > net.params.comm_range) continue;
        const int d = testing::brute_min_delay(net.duty_cycles[u].active_slots(),
                                               net.duty_cycles[w].active_slots(), period);
        if (best == kNoNode || d < best_delay) {
          best = w;
          best_delay = d;
        }
      }
      REQUIRE(tree.parent[u] == best);
    }
  }
}

TEST_CASE("SPT depth equals layer index") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Network net = random_network(seed, 100);
    const Layering lay = compute_layers(net);
    const AggregationTree tree = build_spt_tree(net, lay);
    REQUIRE(check_tree(net, lay, tree).empty());
    for (NodeId u = 0; u < net.size(); ++u) {
      int depth = 0;
      for (NodeId a = u; a != kSink; a = tree.parent[a]) ++depth;
      REQUIRE(depth == lay.layer_of[u]);
    }
  }
}

TEST_CASE("check_tree flags broken trees") {
  const Network path = make_network({{0, 0}, {15, 0}, {30, 0}}, {{1}, {2}, {3}}, 10);
  const Layering lay = compute_layers(path);
  // Node 2 attached straight to the sink: not a neighbor, skips a layer.
  const auto skip = AggregationTree::from_parents({kNoNode, 0, 0});
  CHECK_FALSE(check_tree(path, lay, skip).empty());
  // Cycle between 1 and 2.
  const auto cycle = AggregationTree::from_parents({kNoNode, 2, 1});
  CHECK_FALSE(check_tree(path, lay, cycle).empty());
}

TEST_CASE("tree dump round-trips") {
  const Network net = random_network(3, 120);
  const Layering lay = compute_layers(net);
  const AggregationTree tree = build_ddas_tree(net, lay);
  std::ostringstream os;
  write_tree(os, tree, lay);
  std::istringstream in(os.str());
  const AggregationTree back = read_tree(in, net.size());
  CHECK(back.parent == tree.parent);
  CHECK(back.children == tree.children);

  std::istringstream missing("1 0 1\n");
  CHECK_THROWS_AS(read_tree(missing, 3), std::invalid_argument);
  std::istringstream dup("1 0 1\n1 0 1\n2 1 2\n");
  CHECK_THROWS_AS(read_tree(dup, 3), std::invalid_argument);
}
