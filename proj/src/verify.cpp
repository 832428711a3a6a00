#include "dcagg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dcagg {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::kOneTransmission: return "V1-one-transmission";
    case Rule::kReceiverIsParent: return "V2-receiver-is-parent";
    case Rule::kReceiverAwake: return "V3-receiver-awake";
    case Rule::kPrecedence: return "V4-precedence";
    case Rule::kHalfDuplex: return "V5-half-duplex";
    case Rule::kSingleReception: return "V6-single-reception";
    case Rule::kInterference: return "V7-interference";
    case Rule::kMalformed: return "malformed";
  }
  return "unknown";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << to_string(v.rule);
  if (v.slot >= 0) os << " slot=" << v.slot;
  os << " nodes=";
  for (std::size_t i = 0; i < v.nodes.size(); ++i) os << (i ? "," : "") << v.nodes[i];
  if (!v.message.empty()) os << " : " << v.message;
  return os.str();
}

namespace {

double euclid(const Network& net, NodeId a, NodeId b) {
  const Point& p = net.positions[a];
  const Point& q = net.positions[b];
  return std::hypot(p.x - q.x, p.y - q.y);
}

bool awake(const Network& net, NodeId node, Slot slot) {
  const auto& slots = net.duty_cycles[node].active_slots();
  const auto phase = static_cast<int>(slot % net.params.period_length);
  return std::find(slots.begin(), slots.end(), phase) != slots.end();
}

}  // namespace

std::vector<Violation> verify_schedule(const Network& net, const AggregationTree& tree,
                                       const Schedule& sched) {
  std::vector<Violation> out;
  const int n = net.size();
  const int channels = net.params.channel_count;
  auto in_range = [n](NodeId u) { return u >= 0 && u < n; };

  if (tree.size() != n) {
    out.push_back({Rule::kMalformed, -1, {}, "tree size differs from network size"});
    return out;
  }

  // Well-formed transmissions only take part in the pairwise checks below.
  std::vector<const Transmission*> valid;
  std::vector<int> sends(n, 0);
  std::vector<Slot> send_slot(n, -1);
  for (const Transmission& t : sched.transmissions) {
    if (!in_range(t.sender) || !in_range(t.receiver) || t.slot < 0 || t.channel < 0 ||
        t.channel >= channels) {
      out.push_back({Rule::kMalformed, t.slot, {t.sender, t.receiver},
                     "id, slot or channel out of range"});
      continue;
    }
    if (t.sender == tree.root) {
      out.push_back({Rule::kOneTransmission, t.slot, {t.sender}, "sink must not transmit"});
      continue;
    }
    if (++sends[t.sender] == 2)
      out.push_back({Rule::kOneTransmission, t.slot, {t.sender}, "node transmits more than once"});
    send_slot[t.sender] = t.slot;
    if (tree.parent[t.sender] != t.receiver)
      out.push_back({Rule::kReceiverIsParent, t.slot, {t.sender, t.receiver},
                     "receiver is not the tree parent"});
    if (!awake(net, t.receiver, t.slot))
      out.push_back({Rule::kReceiverAwake, t.slot, {t.receiver}, "receiver asleep"});
    valid.push_back(&t);
  }
  for (NodeId u = 0; u < n; ++u)
    if (u != tree.root && sends[u] == 0)
      out.push_back({Rule::kOneTransmission, -1, {u}, "node never transmits"});

  for (NodeId u = 0; u < n; ++u) {
    if (u == tree.root || sends[u] != 1) continue;
    for (NodeId c : tree.children[u]) {
      if (!in_range(c) || sends[c] != 1) continue;
      if (send_slot[c] >= send_slot[u])
        out.push_back({Rule::kPrecedence, send_slot[u], {u, c}, "node sends before its child"});
    }
  }

  std::map<Slot, std::vector<const Transmission*>> by_slot;
  for (const Transmission* t : valid) by_slot[t->slot].push_back(t);
  const double reach = net.params.interference_range;
  for (const auto& [slot, group] : by_slot) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const Transmission& a = *group[i];
        const Transmission& b = *group[j];
        if (a.receiver == b.receiver)
          out.push_back({Rule::kSingleReception, slot, {a.receiver, a.sender, b.sender},
                         "two receptions in one slot"});
        if (a.sender == b.receiver || b.sender == a.receiver)
          out.push_back({Rule::kHalfDuplex, slot,
                         {a.sender == b.receiver ? a.sender : b.sender},
                         "node sends and receives in one slot"});
        if (a.channel == b.channel && a.receiver != b.receiver &&
            (euclid(net, b.sender, a.receiver) <= reach ||
             euclid(net, a.sender, b.receiver) <= reach))
          out.push_back({Rule::kInterference, slot, {a.sender, a.receiver, b.sender, b.receiver},
                         "concurrent same-channel sender within interference range"});
      }
    }
  }
  return out;
}

}  // namespace dcagg
