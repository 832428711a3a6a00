#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>

#include "dcagg/model.hpp"

namespace dcagg {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Placement attempts before generation gives up on a parameter set.
inline constexpr int kMaxPlacementAttempts = 200;

// Reproducible draws on top of std::mt19937_64, whose output sequence is fixed
// by the C++ standard. Distributions are spelled out here instead of using
// <random>'s, which are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) from the top 53 bits of one draw.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound) by rejection of the biased tail.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t value);

// Draws a connected unit-disk network. Draw order on one Rng seeded with
// params.rng_seed: per attempt, x then y for nodes 0..N-1 (the sink skips its
// draws when its placement is fixed); after the first connected attempt,
// active slots for nodes 0..N-1, each by alpha steps of a partial
// Fisher-Yates shuffle of 0..T-1.
Network generate_network(const Params& params);

// Neighbor lists from Euclidean distance <= range, sorted ascending.
std::vector<std::vector<NodeId>> unit_disk_adjacency(const std::vector<Point>& positions,
                                                     double range);

bool is_connected(const std::vector<std::vector<NodeId>>& adjacency);

struct NetworkStats {
  int node_count = 0;
  int edge_count = 0;
  int max_degree = 0;
  int sink_eccentricity = 0;
};

NetworkStats network_stats(const Network& net);

// Line format: header "N T alpha m d dI area seed", one "id x y s1,s2,..." line
// per node, then one "u v" line per edge (u < v).
void write_topology(std::ostream& out, const Network& net);
Network read_topology(std::istream& in);

}  // namespace dcagg
