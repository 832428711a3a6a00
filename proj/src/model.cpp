#include "dcagg/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dcagg {

void validate(const Params& params) {
  if (params.node_count < 1) throw std::invalid_argument("node_count must be positive");
  if (!(params.area_side > 0.0)) throw std::invalid_argument("area_side must be positive");
  if (!(params.comm_range > 0.0)) throw std::invalid_argument("comm_range must be positive");
  if (params.interference_range < params.comm_range)
    throw std::invalid_argument("interference_range must be >= comm_range");
  if (params.period_length < 1) throw std::invalid_argument("period_length must be positive");
  if (params.active_slot_count < 1 || params.active_slot_count > params.period_length)
    throw std::invalid_argument("active_slot_count must lie in [1, period_length]");
  if (params.channel_count < 1) throw std::invalid_argument("channel_count must be >= 1");
}

std::string to_string(SinkPlacement placement) {
  switch (placement) {
    case SinkPlacement::kRandom: return "random";
    case SinkPlacement::kCenter: return "center";
    case SinkPlacement::kCorner: return "corner";
  }
  return "random";
}

SinkPlacement parse_sink_placement(const std::string& text) {
  if (text == "random") return SinkPlacement::kRandom;
  if (text == "center") return SinkPlacement::kCenter;
  if (text == "corner") return SinkPlacement::kCorner;
  throw std::invalid_argument("unknown sink placement: " + text);
}

DutyCycle::DutyCycle(std::vector<int> active_slots, int period_length)
    : slots_(std::move(active_slots)), period_(period_length) {
  if (period_ < 1) throw std::invalid_argument("period_length must be positive");
  if (slots_.empty()) throw std::invalid_argument("duty cycle needs at least one active slot");
  std::sort(slots_.begin(), slots_.end());
  if (std::adjacent_find(slots_.begin(), slots_.end()) != slots_.end())
    throw std::invalid_argument("duplicate active slot");
  if (slots_.front() < 0 || slots_.back() >= period_)
    throw std::invalid_argument("active slot outside [0, T)");
}

bool DutyCycle::is_active(Slot absolute_slot) const {
  const int phase = static_cast<int>(absolute_slot % period_);
  return std::binary_search(slots_.begin(), slots_.end(), phase);
}

Slot DutyCycle::next_active(Slot from) const {
  const Slot base = from - from % period_;
  const int phase = static_cast<int>(from % period_);
  auto it = std::lower_bound(slots_.begin(), slots_.end(), phase);
  if (it != slots_.end()) return base + *it;
  return base + period_ + slots_.front();
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Network::distance(NodeId a, NodeId b) const {
  return dcagg::distance(positions.at(a), positions.at(b));
}

int sleep_delay(int tau_u, int tau_v, int period_length) {
  if (period_length < 1) throw std::invalid_argument("period_length must be positive");
  if (tau_u < 0 || tau_u >= period_length || tau_v < 0 || tau_v >= period_length)
    throw std::invalid_argument("slot index outside [0, T)");
  return tau_v > tau_u ? tau_v - tau_u : tau_v + period_length - tau_u;
}

int min_sleep_delay(std::span<const int> active_u, std::span<const int> active_v,
                    int period_length) {
  if (active_u.empty() || active_v.empty())
    throw std::invalid_argument("min_sleep_delay needs non-empty active-slot sets");
  int best = std::numeric_limits<int>::max();
  for (int tu : active_u)
    for (int tv : active_v) best = std::min(best, sleep_delay(tu, tv, period_length));
  return best;
}

int min_sleep_delay(const DutyCycle& a_u, const DutyCycle& a_v, int period_length) {
  return min_sleep_delay(a_u.active_slots(), a_v.active_slots(), period_length);
}

}  // namespace dcagg
