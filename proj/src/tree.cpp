#include "dcagg/tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "text_util.hpp"

namespace dcagg {

AggregationTree AggregationTree::from_parents(std::vector<NodeId> parents) {
  AggregationTree tree;
  tree.children.assign(parents.size(), {});
  for (NodeId u = 0; u < static_cast<NodeId>(parents.size()); ++u) {
    const NodeId p = parents[u];
    if (p == kNoNode) continue;
    if (p < 0 || p >= static_cast<NodeId>(parents.size()))
      throw std::invalid_argument("parent id out of range");
    tree.children[p].push_back(u);
  }
  tree.parent = std::move(parents);
  return tree;
}

std::string to_string(TreeMethod method) { return method == TreeMethod::kDdas ? "ddas" : "spt"; }

TreeMethod parse_tree_method(const std::string& text) {
  if (text == "ddas") return TreeMethod::kDdas;
  if (text == "spt") return TreeMethod::kSpt;
  throw std::invalid_argument("unknown tree method: " + text);
}

Layering compute_layers(const Network& net) {
  Layering lay;
  lay.layer_of.assign(net.size(), -1);
  std::queue<NodeId> frontier;
  lay.layer_of[kSink] = 0;
  frontier.push(kSink);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v : net.adjacency[u])
      if (lay.layer_of[v] < 0) {
        lay.layer_of[v] = lay.layer_of[u] + 1;
        frontier.push(v);
      }
  }
  for (NodeId u = 0; u < net.size(); ++u) {
    const int layer = lay.layer_of[u];
    if (layer < 0) throw std::invalid_argument("network is not connected to the sink");
    if (layer >= static_cast<int>(lay.layers.size())) lay.layers.resize(layer + 1);
    lay.layers[layer].push_back(u);  // ascending id within each layer
  }
  return lay;
}

namespace {

template <typename Better>
AggregationTree build_layered(const Network& net, const Layering& lay, Better better) {
  std::vector<NodeId> parents(net.size(), kNoNode);
  for (int i = 1; i <= lay.height(); ++i) {
    for (NodeId u : lay.layers[i]) {
      NodeId best = kNoNode;
      for (NodeId v : net.adjacency[u]) {
        if (lay.layer_of[v] != i - 1) continue;
        // Neighbors arrive in ascending id order, so strict improvement keeps
        // the smallest id among equals.
        if (best == kNoNode || better(u, v, best)) best = v;
      }
      parents[u] = best;
    }
  }
  return AggregationTree::from_parents(std::move(parents));
}

}  // namespace

AggregationTree build_ddas_tree(const Network& net, const Layering& lay) {
  const int period = net.params.period_length;
  return build_layered(net, lay, [&](NodeId u, NodeId candidate, NodeId incumbent) {
    return min_sleep_delay(net.duty_cycles[u], net.duty_cycles[candidate], period) <
           min_sleep_delay(net.duty_cycles[u], net.duty_cycles[incumbent], period);
  });
}

AggregationTree build_spt_tree(const Network& net, const Layering& lay) {
  return build_layered(net, lay, [](NodeId, NodeId, NodeId) { return false; });
}

AggregationTree build_tree(const Network& net, const Layering& lay, TreeMethod method) {
  return method == TreeMethod::kDdas ? build_ddas_tree(net, lay) : build_spt_tree(net, lay);
}

std::vector<std::string> check_tree(const Network& net, const Layering& lay,
                                    const AggregationTree& tree) {
  std::vector<std::string> problems;
  const int n = net.size();
  if (tree.size() != n) {
    problems.push_back("tree has " + std::to_string(tree.size()) + " nodes, network has " +
                       std::to_string(n));
    return problems;
  }
  if (tree.parent[kSink] != kNoNode) problems.push_back("sink has a parent");
  int edges = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (u == kSink) continue;
    const NodeId p = tree.parent[u];
    const std::string tag = "node " + std::to_string(u);
    if (p == kNoNode || p < 0 || p >= n) {
      problems.push_back(tag + " has no valid parent");
      continue;
    }
    ++edges;
    if (!std::binary_search(net.adjacency[u].begin(), net.adjacency[u].end(), p))
      problems.push_back(tag + " parent " + std::to_string(p) + " is not a neighbor");
    if (lay.layer_of[p] != lay.layer_of[u] - 1)
      problems.push_back(tag + " parent " + std::to_string(p) + " is not one layer up");
    const auto& kids = tree.children[p];
    if (!std::binary_search(kids.begin(), kids.end(), u))
      problems.push_back(tag + " missing from its parent's child list");
    // Walk to the root; a valid tree needs exactly layer_of(u) hops.
    NodeId walker = u;
    int hops = 0;
    while (walker != kSink && walker != kNoNode && hops <= n) {
      walker = tree.parent[walker];
      ++hops;
    }
    if (walker != kSink || hops != lay.layer_of[u])
      problems.push_back(tag + " does not reach the sink in layer_of(u) hops");
  }
  if (edges != n - 1) problems.push_back("tree has " + std::to_string(edges) + " edges");
  for (NodeId p = 0; p < n; ++p) {
    if (!std::is_sorted(tree.children[p].begin(), tree.children[p].end()))
      problems.push_back("children of " + std::to_string(p) + " not sorted");
    for (NodeId c : tree.children[p])
      if (tree.parent[c] != p)
        problems.push_back("child list of " + std::to_string(p) + " lists " + std::to_string(c));
  }
  return problems;
}

void write_tree(std::ostream& out, const AggregationTree& tree, const Layering& lay) {
  for (NodeId u = 0; u < tree.size(); ++u)
    if (u != tree.root) out << u << ' ' << tree.parent[u] << ' ' << lay.layer_of[u] << '\n';
}

AggregationTree read_tree(std::istream& in, int node_count) {
  using detail::parse_number;
  std::vector<NodeId> parents(node_count, kNoNode);
  std::vector<bool> seen(node_count, false);
  std::string line;
  while (std::getline(in, line)) {
    auto f = detail::tokens(line);
    if (f.empty()) continue;
    if (f.size() != 3) throw std::invalid_argument("tree: line needs 'u parent layer'");
    const auto u = parse_number<NodeId>(f[0], "node");
    const auto p = parse_number<NodeId>(f[1], "parent");
    parse_number<int>(f[2], "layer");
    if (u <= kSink || u >= node_count) throw std::invalid_argument("tree: bad node id " + line);
    if (p < 0 || p >= node_count) throw std::invalid_argument("tree: bad parent id " + line);
    if (seen[u]) throw std::invalid_argument("tree: duplicate node " + line);
    seen[u] = true;
    parents[u] = p;
  }
  for (NodeId u = 1; u < node_count; ++u)
    if (!seen[u]) throw std::invalid_argument("tree: missing node " + std::to_string(u));
  return AggregationTree::from_parents(std::move(parents));
}

}  // namespace dcagg
