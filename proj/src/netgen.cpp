#include "dcagg/netgen.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "text_util.hpp"

namespace dcagg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // 2^64 - (2^64 mod bound), wrapping to 0 when bound divides 2^64.
  const std::uint64_t limit = -(-bound % bound);
  while (true) {
    const std::uint64_t x = next();
    if (limit == 0 || x < limit) return x % bound;
  }
}

std::uint64_t mix_seed(std::uint64_t value) {
  std::uint64_t z = value + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::vector<NodeId>> unit_disk_adjacency(const std::vector<Point>& positions,
                                                     double range) {
  const auto n = static_cast<NodeId>(positions.size());
  std::vector<std::vector<NodeId>> adj(positions.size());
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (distance(positions[u], positions[v]) <= range) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

namespace {

std::vector<int> bfs_hops(const std::vector<std::vector<NodeId>>& adjacency, NodeId source) {
  std::vector<int> hops(adjacency.size(), -1);
  std::queue<NodeId> frontier;
  hops[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v : adjacency[u])
      if (hops[v] < 0) {
        hops[v] = hops[u] + 1;
        frontier.push(v);
      }
  }
  return hops;
}

std::string describe(const Params& p) {
  std::ostringstream os;
  os << "N=" << p.node_count << " area=" << p.area_side << " d=" << p.comm_range
     << " T=" << p.period_length << " alpha=" << p.active_slot_count << " seed=" << p.rng_seed;
  return os.str();
}

}  // namespace

bool is_connected(const std::vector<std::vector<NodeId>>& adjacency) {
  if (adjacency.empty()) return true;
  const auto hops = bfs_hops(adjacency, kSink);
  return std::none_of(hops.begin(), hops.end(), [](int h) { return h < 0; });
}

Network generate_network(const Params& params) {
  validate(params);
  if (params.node_count < 2) throw std::invalid_argument("generate_network needs node_count >= 2");

  Rng rng(params.rng_seed);
  const double side = params.area_side;
  Network net;
  net.params = params;
  net.positions.resize(params.node_count);

  bool connected = false;
  for (int attempt = 0; attempt < kMaxPlacementAttempts && !connected; ++attempt) {
    for (NodeId u = 0; u < params.node_count; ++u) {
      if (u == kSink && params.sink_placement == SinkPlacement::kCenter) {
        net.positions[u] = {side / 2, side / 2};
      } else if (u == kSink && params.sink_placement == SinkPlacement::kCorner) {
        net.positions[u] = {0.0, 0.0};
      } else {
        const double x = rng.uniform01() * side;
        const double y = rng.uniform01() * side;
        net.positions[u] = {x, y};
      }
    }
    net.adjacency = unit_disk_adjacency(net.positions, params.comm_range);
    connected = is_connected(net.adjacency);
  }
  if (!connected)
    throw GenerationError("no connected placement after " + std::to_string(kMaxPlacementAttempts) +
                          " attempts (" + describe(params) + ")");

  const int period = params.period_length;
  std::vector<int> pool(period);
  net.duty_cycles.reserve(params.node_count);
  for (NodeId u = 0; u < params.node_count; ++u) {
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < params.active_slot_count; ++i) {
      const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(period - i)));
      std::swap(pool[i], pool[j]);
    }
    net.duty_cycles.emplace_back(
        std::vector<int>(pool.begin(), pool.begin() + params.active_slot_count), period);
  }
  return net;
}

NetworkStats network_stats(const Network& net) {
  NetworkStats stats;
  stats.node_count = net.size();
  std::size_t degree_sum = 0;
  for (const auto& list : net.adjacency) {
    degree_sum += list.size();
    stats.max_degree = std::max(stats.max_degree, static_cast<int>(list.size()));
  }
  stats.edge_count = static_cast<int>(degree_sum / 2);
  if (!net.adjacency.empty()) {
    const auto hops = bfs_hops(net.adjacency, kSink);
    stats.sink_eccentricity = *std::max_element(hops.begin(), hops.end());
  }
  return stats;
}

void write_topology(std::ostream& out, const Network& net) {
  using detail::format_double;
  const Params& p = net.params;
  out << p.node_count << ' ' << p.period_length << ' ' << p.active_slot_count << ' '
      << p.channel_count << ' ' << format_double(p.comm_range) << ' '
      << format_double(p.interference_range) << ' ' << format_double(p.area_side) << ' '
      << p.rng_seed << '\n';
  for (NodeId u = 0; u < net.size(); ++u) {
    out << u << ' ' << format_double(net.positions[u].x) << ' '
        << format_double(net.positions[u].y) << ' ';
    const auto& slots = net.duty_cycles[u].active_slots();
    for (std::size_t i = 0; i < slots.size(); ++i) out << (i ? "," : "") << slots[i];
    out << '\n';
  }
  for (NodeId u = 0; u < net.size(); ++u)
    for (NodeId v : net.adjacency[u])
      if (u < v) out << u << ' ' << v << '\n';
}

Network read_topology(std::istream& in) {
  using detail::parse_number;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line))
      if (!detail::trim(line).empty()) return true;
    return false;
  };

  if (!next_line()) throw std::invalid_argument("topology: missing header");
  auto head = detail::tokens(line);
  if (head.size() != 8) throw std::invalid_argument("topology: header needs 8 fields");
  Network net;
  Params& p = net.params;
  p.node_count = parse_number<int>(head[0], "N");
  p.period_length = parse_number<int>(head[1], "T");
  p.active_slot_count = parse_number<int>(head[2], "alpha");
  p.channel_count = parse_number<int>(head[3], "m");
  p.comm_range = parse_number<double>(head[4], "d");
  p.interference_range = parse_number<double>(head[5], "dI");
  p.area_side = parse_number<double>(head[6], "area");
  p.rng_seed = parse_number<std::uint64_t>(head[7], "seed");
  validate(p);

  net.positions.resize(p.node_count);
  net.duty_cycles.resize(p.node_count);
  for (NodeId u = 0; u < p.node_count; ++u) {
    if (!next_line()) throw std::invalid_argument("topology: missing node line " + std::to_string(u));
    auto f = detail::tokens(line);
    if (f.size() != 4) throw std::invalid_argument("topology: node line needs 4 fields");
    if (parse_number<NodeId>(f[0], "node id") != u)
      throw std::invalid_argument("topology: node lines must be in id order");
    net.positions[u] = {parse_number<double>(f[1], "x"), parse_number<double>(f[2], "y")};
    std::vector<int> slots;
    for (auto s : detail::split(f[3], ',')) slots.push_back(parse_number<int>(s, "slot"));
    if (static_cast<int>(slots.size()) != p.active_slot_count)
      throw std::invalid_argument("topology: node " + std::to_string(u) + " needs alpha slots");
    net.duty_cycles[u] = DutyCycle(std::move(slots), p.period_length);
  }

  net.adjacency.assign(p.node_count, {});
  while (next_line()) {
    auto f = detail::tokens(line);
    if (f.size() != 2) throw std::invalid_argument("topology: edge line needs 2 fields");
    const auto u = parse_number<NodeId>(f[0], "edge endpoint");
    const auto v = parse_number<NodeId>(f[1], "edge endpoint");
    if (u < 0 || v < 0 || u >= p.node_count || v >= p.node_count || u == v)
      throw std::invalid_argument("topology: bad edge " + line);
    net.adjacency[u].push_back(v);
    net.adjacency[v].push_back(u);
  }
  for (auto& list : net.adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return net;
}

}  // namespace dcagg
