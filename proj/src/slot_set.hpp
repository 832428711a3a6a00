#pragma once

#include <vector>

#include "dcagg/model.hpp"
#include "dcagg/scheduler.hpp"

namespace dcagg::detail {

// Transmissions sharing one slot, with the admission test used by both the
// greedy scheduler and the exhaustive search.
class SlotSet {
 public:
  bool admits(const Network& net, NodeId sender, NodeId receiver, int channel) const {
    const double reach = net.params.interference_range;
    for (const Transmission& t : members_) {
      if (t.receiver == receiver || t.sender == receiver || t.receiver == sender ||
          t.sender == sender)
        return false;
      if (t.channel != channel) continue;
      if (net.distance(t.sender, receiver) <= reach) return false;
      if (net.distance(sender, t.receiver) <= reach) return false;
    }
    return true;
  }

  // The receiver is already busy in this slot on every channel.
  bool receiver_busy(NodeId receiver) const {
    for (const Transmission& t : members_)
      if (t.receiver == receiver || t.sender == receiver) return true;
    return false;
  }

  int max_channel() const {
    int best = -1;
    for (const Transmission& t : members_) best = t.channel > best ? t.channel : best;
    return best;
  }

  void add(const Transmission& t) { members_.push_back(t); }
  void pop() { members_.pop_back(); }
  void clear() { members_.clear(); }
  bool empty() const { return members_.empty(); }

 private:
  std::vector<Transmission> members_;
};

}  // namespace dcagg::detail
