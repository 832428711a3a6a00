#include "dcagg/scheduler.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "slot_set.hpp"
#include "text_util.hpp"

namespace dcagg {

std::string to_string(CandidatePolicy policy) {
  return policy == CandidatePolicy::kAllLeaves ? "all-leaves" : "layered";
}

CandidatePolicy parse_candidate_policy(const std::string& text) {
  if (text == "all-leaves") return CandidatePolicy::kAllLeaves;
  if (text == "layered") return CandidatePolicy::kDeepestLayerOnly;
  throw std::invalid_argument("unknown candidate policy: " + text);
}

namespace {

std::vector<int> tree_depths(const AggregationTree& tree) {
  const int n = tree.size();
  std::vector<int> depth(n, -1);
  depth[tree.root] = 0;
  // Children lists give a top-down order without recursion.
  std::vector<NodeId> stack{tree.root};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId c : tree.children[u]) {
      depth[c] = depth[u] + 1;
      stack.push_back(c);
    }
  }
  for (NodeId u = 0; u < n; ++u)
    if (depth[u] < 0) throw std::invalid_argument("tree does not span the network");
  return depth;
}

}  // namespace

Schedule schedule(const Network& net, const AggregationTree& tree, CandidatePolicy policy,
                  ScheduleTrace* trace) {
  const int n = net.size();
  if (tree.size() != n) throw std::invalid_argument("tree and network sizes differ");
  if (net.params.channel_count < 1) throw std::invalid_argument("channel_count must be >= 1");
  const int period = net.params.period_length;
  const int channels = net.params.channel_count;
  const std::vector<int> depth = tree_depths(tree);

  std::vector<int> pending_children(n);
  for (NodeId u = 0; u < n; ++u) pending_children[u] = static_cast<int>(tree.children[u].size());
  std::vector<bool> done(n, false);
  done[tree.root] = true;
  int remaining = n - 1;

  std::vector<Transmission> out;
  out.reserve(n > 0 ? n - 1 : 0);
  Slot round_start = 0;
  std::vector<std::vector<NodeId>> by_phase(period);
  detail::SlotSet slot_set;

  while (remaining > 0) {
    std::vector<NodeId> leaves;
    for (NodeId u = 0; u < n; ++u)
      if (!done[u] && pending_children[u] == 0) leaves.push_back(u);
    if (policy == CandidatePolicy::kDeepestLayerOnly) {
      int deepest = 0;
      for (NodeId u = 0; u < n; ++u)
        if (!done[u]) deepest = std::max(deepest, depth[u]);
      std::erase_if(leaves, [&](NodeId u) { return depth[u] != deepest; });
    }
    std::sort(leaves.begin(), leaves.end(), [&](NodeId a, NodeId b) {
      return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });

    // Bucket candidates by the phases at which their parent is awake; each
    // bucket keeps the visiting order.
    for (auto& bucket : by_phase) bucket.clear();
    for (NodeId u : leaves)
      for (int phase : net.duty_cycles[tree.parent[u]].active_slots()) by_phase[phase].push_back(u);

    std::vector<bool> placed(n, false);
    std::size_t unplaced = leaves.size();
    Slot last = round_start;
    for (Slot t = round_start; unplaced > 0; ++t) {
      slot_set.clear();
      for (NodeId u : by_phase[t % period]) {
        if (placed[u]) continue;
        const NodeId p = tree.parent[u];
        if (slot_set.receiver_busy(p)) continue;
        for (int c = 0; c < channels; ++c) {
          if (!slot_set.admits(net, u, p, c)) continue;
          const Transmission tx{u, p, t, c};
          slot_set.add(tx);
          out.push_back(tx);
          placed[u] = true;
          --unplaced;
          last = t;
          break;
        }
      }
    }

    for (NodeId u : leaves) {
      done[u] = true;
      --pending_children[tree.parent[u]];
    }
    remaining -= static_cast<int>(leaves.size());
    if (trace) {
      trace->round_sizes.push_back(static_cast<int>(leaves.size()));
      trace->round_starts.push_back(round_start);
    }
    round_start = last + 1;
  }
  return make_schedule(std::move(out));
}

Slot aggregation_delay(const std::vector<Transmission>& transmissions) {
  if (transmissions.empty()) throw std::invalid_argument("aggregation_delay of an empty schedule");
  Slot last = transmissions.front().slot;
  for (const auto& t : transmissions) last = std::max(last, t.slot);
  return last + 1;
}

Slot aggregation_delay(const Schedule& sched) { return aggregation_delay(sched.transmissions); }

Schedule make_schedule(std::vector<Transmission> transmissions) {
  std::sort(transmissions.begin(), transmissions.end(),
            [](const Transmission& a, const Transmission& b) {
              return a.sender != b.sender ? a.sender < b.sender : a.slot < b.slot;
            });
  Schedule sched;
  sched.delay = transmissions.empty() ? 0 : aggregation_delay(transmissions);
  sched.transmissions = std::move(transmissions);
  return sched;
}

void write_schedule(std::ostream& out, const Schedule& sched) {
  for (const auto& t : sched.transmissions)
    out << t.sender << ' ' << t.receiver << ' ' << t.slot << ' ' << t.channel << '\n';
}

Schedule read_schedule(std::istream& in) {
  using detail::parse_number;
  std::vector<Transmission> txs;
  std::string line;
  while (std::getline(in, line)) {
    auto f = detail::tokens(line);
    if (f.empty()) continue;
    if (f.size() != 4) throw std::invalid_argument("schedule: line needs 'sender receiver slot channel'");
    txs.push_back({parse_number<NodeId>(f[0], "sender"), parse_number<NodeId>(f[1], "receiver"),
                   parse_number<Slot>(f[2], "slot"), parse_number<int>(f[3], "channel")});
  }
  return make_schedule(std::move(txs));
}

}  // namespace dcagg
