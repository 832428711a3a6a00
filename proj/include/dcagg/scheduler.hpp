#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcagg/model.hpp"
#include "dcagg/tree.hpp"

namespace dcagg {

struct Transmission {
  NodeId sender = kNoNode;
  NodeId receiver = kNoNode;
  Slot slot = 0;
  int channel = 0;

  bool operator==(const Transmission&) const = default;
};

struct Schedule {
  std::vector<Transmission> transmissions;  // sorted by sender
  Slot delay = 0;                           // 1 + last occupied slot

  bool operator==(const Schedule&) const = default;
};

// Which childless nodes a round may schedule.
enum class CandidatePolicy {
  kAllLeaves,         // every childless node of the remaining tree
  kDeepestLayerOnly,  // only those in the deepest remaining layer
};

std::string to_string(CandidatePolicy policy);
CandidatePolicy parse_candidate_policy(const std::string& text);

// Number of leaves taken per round, in round order.
struct ScheduleTrace {
  std::vector<int> round_sizes;
  std::vector<Slot> round_starts;
};

// Round-based leaf scheduling over the aggregation tree.
//
// Each round collects the current candidate leaves and sweeps slots upward
// from the round's start. At slot t the unassigned candidates whose parent is
// awake at t are visited deepest first (ties by id) and each takes the first
// channel that keeps the slot conflict-free. The round ends when every
// candidate is placed; the next round starts one slot after its last
// transmission, so children always precede their parent.
//
// Termination: the first candidate visited in any slot meets an empty slot
// and is always accepted, and every parent wakes within T slots, so each
// round places at least one node per T slots.
Schedule schedule(const Network& net, const AggregationTree& tree, CandidatePolicy policy,
                  ScheduleTrace* trace = nullptr);

// 1 + the largest transmission slot. Throws on an empty schedule.
Slot aggregation_delay(const Schedule& sched);
Slot aggregation_delay(const std::vector<Transmission>& transmissions);

// Builds a Schedule from raw transmissions: sorts by sender and sets delay.
Schedule make_schedule(std::vector<Transmission> transmissions);

// "sender receiver slot channel" per transmission.
void write_schedule(std::ostream& out, const Schedule& sched);
Schedule read_schedule(std::istream& in);

}  // namespace dcagg
