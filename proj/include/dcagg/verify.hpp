#pragma once

#include <string>
#include <vector>

#include "dcagg/model.hpp"
#include "dcagg/scheduler.hpp"
#include "dcagg/tree.hpp"

namespace dcagg {

enum class Rule {
  kOneTransmission,   // V1: exactly one transmission per non-sink node
  kReceiverIsParent,  // V2
  kReceiverAwake,     // V3: slot mod T is an active slot of the receiver
  kPrecedence,        // V4: a node sends strictly after all of its children
  kHalfDuplex,        // V5: no node sends and receives in the same slot
  kSingleReception,   // V6: at most one reception per node per slot, any channel
  kInterference,      // V7: same-slot same-channel senders stay beyond d_I of other receivers
  kMalformed,         // ids, slots or channels outside their ranges
};

std::string to_string(Rule rule);

struct Violation {
  Rule rule;
  Slot slot = -1;  // -1 when the violation is not tied to one slot
  std::vector<NodeId> nodes;
  std::string message;
};

std::string describe(const Violation& v);

// Checks a schedule against the network and tree using only their public
// data. Accepts arbitrary input; problems are reported, never thrown.
std::vector<Violation> verify_schedule(const Network& net, const AggregationTree& tree,
                                       const Schedule& sched);

}  // namespace dcagg
