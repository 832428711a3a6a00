#pragma once

#include <optional>

#include "dcagg/model.hpp"
#include "dcagg/scheduler.hpp"
#include "dcagg/tree.hpp"

namespace dcagg {

struct OracleLimits {
  static constexpr int kMaxNodes = 8;
  static constexpr int kMaxPeriod = 6;
  static constexpr int kMaxChannels = 2;
  static constexpr int kMaxHorizonPeriods = 3;
};

// Minimum-delay schedule over the tree with every slot in [0, horizon), found
// by exhaustive search; std::nullopt when none fits. Feasibility is tested for
// increasing delay bounds, so the first hit is optimal. Throws
// std::invalid_argument outside the OracleLimits bounds.
std::optional<Schedule> brute_force_optimal(const Network& net, const AggregationTree& tree,
                                            Slot horizon);

}  // namespace dcagg
