#include "dcagg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "slot_set.hpp"

namespace dcagg {

namespace {

class Search {
 public:
  Search(const Network& net, const AggregationTree& tree, Slot horizon)
      : net_(net), tree_(tree), slots_(horizon), slot_of_(net.size(), -1) {
    const int n = net.size();
    std::vector<int> depth(n, 0);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId a = u; a != tree.root; a = tree.parent[a])
        if (a == kNoNode || ++depth[u] > n) throw std::invalid_argument("tree is not rooted");
    for (NodeId u = 0; u < n; ++u)
      if (u != tree.root) order_.push_back(u);
    std::sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) {
      return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });
  }

  // Conflict-free earliest completion ignoring interference; a lower bound.
  Slot lower_bound() const {
    std::vector<Slot> earliest(net_.size(), -1);
    Slot finish = 0;
    for (NodeId u : order_) {
      Slot ready = 0;
      for (NodeId c : tree_.children[u]) ready = std::max(ready, earliest[c] + 1);
      earliest[u] = wake(tree_.parent[u], ready);
      finish = std::max(finish, earliest[u] + 1);
    }
    return finish;
  }

  std::optional<Schedule> solve() {
    const auto horizon = static_cast<Slot>(slots_.size());
    for (Slot bound = lower_bound(); bound <= horizon; ++bound) {
      bound_ = bound;
      if (place(0)) return make_schedule(placed_);
    }
    return std::nullopt;
  }

 private:
  Slot wake(NodeId node, Slot from) const { return net_.duty_cycles[node].next_active(from); }

  // Whether the path from `node`'s parent up to the sink can still finish
  // inside the bound after `node` sends at `slot`.
  bool ancestors_fit(NodeId node, Slot slot) const {
    Slot t = slot;
    for (NodeId a = tree_.parent[node]; a != tree_.root; a = tree_.parent[a]) {
      t = wake(tree_.parent[a], t + 1);
      if (t >= bound_) return false;
    }
    return true;
  }

  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    const NodeId u = order_[k];
    const NodeId p = tree_.parent[u];
    Slot ready = 0;
    for (NodeId c : tree_.children[u]) ready = std::max(ready, slot_of_[c] + 1);
    for (Slot s = wake(p, ready); s < bound_; s = wake(p, s + 1)) {
      if (!ancestors_fit(u, s)) break;
      auto& set = slots_[s];
      // Channels are interchangeable within a slot; opening more than one
      // fresh channel only repeats symmetric branches.
      const int top = std::min(net_.params.channel_count - 1, set.max_channel() + 1);
      for (int c = 0; c <= top; ++c) {
        if (!set.admits(net_, u, p, c)) continue;
        const Transmission tx{u, p, s, c};
        set.add(tx);
        placed_.push_back(tx);
        slot_of_[u] = s;
        if (place(k + 1)) return true;
        slot_of_[u] = -1;
        placed_.pop_back();
        set.pop();
      }
    }
    return false;
  }

  const Network& net_;
  const AggregationTree& tree_;
  std::vector<detail::SlotSet> slots_;
  std::vector<Slot> slot_of_;
  std::vector<NodeId> order_;
  std::vector<Transmission> placed_;
  Slot bound_ = 0;
};

}  // namespace

std::optional<Schedule> brute_force_optimal(const Network& net, const AggregationTree& tree,
                                            Slot horizon) {
  const Params& p = net.params;
  if (net.size() < 2 || net.size() > OracleLimits::kMaxNodes)
    throw std::invalid_argument("oracle supports 2.." + std::to_string(OracleLimits::kMaxNodes) +
                                " nodes");
  if (p.period_length > OracleLimits::kMaxPeriod)
    throw std::invalid_argument("oracle supports T <= " + std::to_string(OracleLimits::kMaxPeriod));
  if (p.channel_count < 1 || p.channel_count > OracleLimits::kMaxChannels)
    throw std::invalid_argument("oracle supports m <= " +
                                std::to_string(OracleLimits::kMaxChannels));
  if (horizon < 1 || horizon > OracleLimits::kMaxHorizonPeriods * p.period_length)
    throw std::invalid_argument("oracle horizon must lie in [1, 3T]");
  if (tree.size() != net.size()) throw std::invalid_argument("tree and network sizes differ");
  return Search(net, tree, horizon).solve();
}

}  // namespace dcagg
