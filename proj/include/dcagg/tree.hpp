#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcagg/model.hpp"

namespace dcagg {

// BFS hop distance of every node from the sink; layers[0] == {sink}.
struct Layering {
  std::vector<int> layer_of;
  std::vector<std::vector<NodeId>> layers;

  int height() const { return static_cast<int>(layers.size()) - 1; }
};

struct AggregationTree {
  std::vector<NodeId> parent;                 // kNoNode for the sink
  std::vector<std::vector<NodeId>> children;  // sorted ascending
  NodeId root = kSink;

  int size() const { return static_cast<int>(parent.size()); }

  // Builds sorted child lists from a parent vector.
  static AggregationTree from_parents(std::vector<NodeId> parents);
};

enum class TreeMethod { kDdas, kSpt };

std::string to_string(TreeMethod method);
TreeMethod parse_tree_method(const std::string& text);

Layering compute_layers(const Network& net);

// Each node in layers 1..R picks, among its neighbors one layer up, the one
// with the smallest minimal sleep delay; ties go to the smallest id.
AggregationTree build_ddas_tree(const Network& net, const Layering& lay);

// Unit-weight shortest-path tree: smallest-id neighbor one layer up.
AggregationTree build_spt_tree(const Network& net, const Layering& lay);

AggregationTree build_tree(const Network& net, const Layering& lay, TreeMethod method);

// Structural problems with a tree relative to a network and layering; empty
// when the tree spans the network along layer-respecting network edges.
std::vector<std::string> check_tree(const Network& net, const Layering& lay,
                                    const AggregationTree& tree);

// "u parent layer" per non-sink node in id order.
void write_tree(std::ostream& out, const AggregationTree& tree, const Layering& lay);
// Reads a tree dump for a network of node_count nodes. The layer column is
// informational and not checked here.
AggregationTree read_tree(std::istream& in, int node_count);

}  // namespace dcagg
