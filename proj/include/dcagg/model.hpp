#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dcagg {

using NodeId = std::int32_t;
using Slot = std::int64_t;

inline constexpr NodeId kSink = 0;
inline constexpr NodeId kNoNode = -1;

enum class SinkPlacement { kRandom, kCenter, kCorner };

struct Params {
  int node_count = 200;
  double area_side = 100.0;
  double comm_range = 20.0;
  double interference_range = 20.0;
  int period_length = 20;
  int active_slot_count = 2;
  int channel_count = 3;
  std::uint64_t rng_seed = 1;
  SinkPlacement sink_placement = SinkPlacement::kRandom;

  bool operator==(const Params&) const = default;
};

// Throws std::invalid_argument naming the first broken invariant.
void validate(const Params& params);

std::string to_string(SinkPlacement placement);
SinkPlacement parse_sink_placement(const std::string& text);

// Sorted, distinct slot indices in [0, T) at which a node can receive.
class DutyCycle {
 public:
  DutyCycle() = default;
  DutyCycle(std::vector<int> active_slots, int period_length);

  const std::vector<int>& active_slots() const { return slots_; }
  int period_length() const { return period_; }
  bool is_active(Slot absolute_slot) const;
  // Smallest absolute slot >= from at which this node is awake.
  Slot next_active(Slot from) const;

  bool operator==(const DutyCycle&) const = default;

 private:
  std::vector<int> slots_;
  int period_ = 0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

double distance(const Point& a, const Point& b);

struct Network {
  Params params;
  std::vector<Point> positions;
  std::vector<std::vector<NodeId>> adjacency;
  std::vector<DutyCycle> duty_cycles;

  int size() const { return static_cast<int>(positions.size()); }
  double distance(NodeId a, NodeId b) const;

  bool operator==(const Network&) const = default;
};

// Slots a sender active at tau_u waits for a receiver active at tau_v.
// Equal slots fall into the wrap-around branch and cost a full period.
int sleep_delay(int tau_u, int tau_v, int period_length);

// Minimum of sleep_delay over all pairs of the two active-slot sets.
int min_sleep_delay(std::span<const int> active_u, std::span<const int> active_v,
                    int period_length);
int min_sleep_delay(const DutyCycle& a_u, const DutyCycle& a_v, int period_length);

}  // namespace dcagg
