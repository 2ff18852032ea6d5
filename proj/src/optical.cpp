#include "eon/optical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "eon/layer.hpp"

namespace eon {
namespace {

SpectrumMask route_union(const MultiLayerNet& net, std::span<const FiberId> route) {
  if (route.empty()) throw std::invalid_argument("empty fiber route");
  SpectrumMask mask(net.slots());
  for (auto f : route) mask |= net.fiber(f).spectrum;
  return mask;
}

int new_lightpath_level(const MultiLayerNet& net, double km, const ProvisionOptions& options) {
  const auto& table = net.modulation();
  if (options.modulation == NewLightpathModulation::kDistanceBest) {
    return table.best_level_for_distance(km).value_or(0);
  }
  return km <= table.reach(table.default_level()) ? table.default_level() : 0;
}

// Working copy of the route's masks and of the lightpaths touched while
// planning a degradation.
struct Scratch {
  const MultiLayerNet& net;
  std::vector<FiberId> route;
  std::map<FiberId, SpectrumMask> masks;
  std::map<LightpathId, LightpathDegradation> changes;

  Scratch(const MultiLayerNet& n, std::span<const FiberId> r) : net(n), route(r.begin(), r.end()) {
    for (auto f : route) masks.emplace(f, net.fiber(f).spectrum);
  }

  std::pair<int, int> span_of(LightpathId id) const {
    if (auto it = changes.find(id); it != changes.end()) {
      return {it->second.first_slot, it->second.last_slot};
    }
    const auto& lp = net.lightpath(id);
    return {lp.first_slot, lp.last_slot};
  }

  bool free_everywhere(int slot) const {
    for (const auto& [f, mask] : masks) {
      if (mask.used(slot)) return false;
    }
    return true;
  }

  // Free region in the route intersection grown out from seed [l, r].
  std::pair<int, int> region(int l, int r) const {
    int lo = l;
    int hi = r;
    while (lo > 1 && free_everywhere(lo - 1)) --lo;
    while (hi < net.slots() && free_everywhere(hi + 1)) ++hi;
    return {lo, hi};
  }

  // Nearest lightpath on each route fiber strictly left of `l` (or right
  // of `r`), deduplicated.
  std::set<LightpathId> neighbours(int l, int r, bool left) const {
    std::set<LightpathId> out;
    for (auto f : route) {
      std::optional<LightpathId> best;
      int best_edge = 0;
      for (auto id : net.lightpaths_on(f)) {
        const auto [first, last] = span_of(id);
        if (left && last < l && (!best || last > best_edge)) {
          best = id;
          best_edge = last;
        } else if (!left && first > r && (!best || first < best_edge)) {
          best = id;
          best_edge = first;
        }
      }
      if (best) out.insert(*best);
    }
    return out;
  }

  void degrade_to_best(LightpathId id, Anchor anchor) {
    const auto& lp = net.lightpath(id);
    const auto& table = net.modulation();
    const auto best = table.best_level_for_distance(lp.length_km);
    if (!best || *best <= lp.level) return;
    const int slots = degraded_slot_count(table, lp.slot_count(), lp.level, *best);
    if (slots * table.rate_per_slot(*best) + 1e-9 < lp.reserved_gbps()) return;
    LightpathDegradation change{id, lp.level, *best, lp.first_slot, lp.last_slot, anchor};
    if (anchor == Anchor::kLeft) {
      change.last_slot = lp.first_slot + slots - 1;
    } else {
      change.first_slot = lp.last_slot - slots + 1;
    }
    for (auto f : lp.fibers) {
      auto it = masks.find(f);
      if (it == masks.end()) continue;
      it->second.clear(lp.first_slot, lp.last_slot);
      it->second.set(change.first_slot, change.last_slot);
    }
    changes[id] = change;
  }
};

}  // namespace

std::vector<int> compute_assi(const MultiLayerNet& net, std::span<const FiberId> route) {
  const auto mask = route_union(net, route);
  std::vector<int> slots;
  for (int s = 1; s <= mask.size(); ++s) {
    if (!mask.used(s)) slots.push_back(s);
  }
  return slots;
}

std::vector<int> compute_sbtl(const MultiLayerNet& net, std::span<const FiberId> route) {
  if (route.empty()) throw std::invalid_argument("empty fiber route");
  const int borders = net.slots() + 1;
  std::vector<char> straddled(static_cast<std::size_t>(borders) + 1, 0);
  for (auto f : route) {
    for (auto id : net.lightpaths_on(f)) {
      const auto& lp = net.lightpath(id);
      for (int w = lp.first_slot + 1; w <= lp.last_slot; ++w) straddled[w] = 1;
    }
  }
  std::vector<int> out;
  for (int w = 1; w <= borders; ++w) {
    if (!straddled[w]) out.push_back(w);
  }
  return out;
}

int degraded_slot_count(const ModulationTable& table, int slots, int from_level, int to_level) {
  const int bits = slots * table.bits_per_symbol(from_level);
  const int per_slot = table.bits_per_symbol(to_level);
  return (bits + per_slot - 1) / per_slot;
}

const Lightpath& degrade_lightpath(MultiLayerNet& net, LightpathId id, int new_level,
                                   Anchor anchor) {
  const auto& lp = net.lightpath(id);
  const auto& table = net.modulation();
  if (new_level <= lp.level) {
    throw std::invalid_argument("degradation must raise the modulation level");
  }
  if (lp.length_km > table.reach(new_level)) {
    throw std::invalid_argument("lightpath " + std::to_string(id) + " of " +
                                std::to_string(lp.length_km) + " km exceeds the reach of level " +
                                std::to_string(new_level));
  }
  const int slots = degraded_slot_count(table, lp.slot_count(), lp.level, new_level);
  if (slots * table.rate_per_slot(new_level) + 1e-9 < lp.reserved_gbps()) {
    throw std::invalid_argument("degradation would strand groomed traffic");
  }
  const int first = anchor == Anchor::kLeft ? lp.first_slot : lp.last_slot - slots + 1;
  net.reshape_lightpath(id, first, first + slots - 1, new_level);
  return net.lightpath(id);
}

std::optional<int> first_fit(const MultiLayerNet& net, std::span<const FiberId> route,
                             int slot_count) {
  for (const auto& run : free_runs(route_union(net, route))) {
    if (run.length() >= slot_count) return run.first;
  }
  return std::nullopt;
}

std::optional<EstablishmentPlan> od_msa(const MultiLayerNet& net, std::span<const FiberId> route,
                                        const LightpathRequest& l0, double length_km) {
  const auto& table = net.modulation();
  const int level = l0.level > 0 ? l0.level : table.default_level();
  const auto nodes = net.route_nodes(route);
  if (nodes.front() != l0.i || nodes.back() != l0.j) {
    throw std::invalid_argument("fiber route does not connect the lightpath request");
  }
  if (l0.theta < 1 || l0.theta > net.slots()) return std::nullopt;
  if (length_km > table.reach(level)) return std::nullopt;

  EstablishmentPlan plan;
  plan.route.assign(route.begin(), route.end());
  plan.slot_count = l0.theta;
  plan.level = level;

  const auto runs = free_runs(route_union(net, route));
  for (const auto& run : runs) {
    if (run.length() >= l0.theta) {
      plan.first_slot = run.first;
      return plan;
    }
  }

  int l = 0;
  int r = 0;
  if (!runs.empty()) {
    auto widest = std::max_element(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
      return a.length() < b.length();  // first maximum wins
    });
    l = widest->first;
    r = widest->last;
  } else {
    const auto borders = compute_sbtl(net, route);
    l = borders.front();  // never empty: border 1 is unstraddled
    r = l - 1;
  }

  Scratch scratch(net, route);
  for (auto id : scratch.neighbours(l, r, true)) scratch.degrade_to_best(id, Anchor::kLeft);
  auto [lo, hi] = scratch.region(l, r);
  if (hi - lo + 1 < l0.theta) {
    for (auto id : scratch.neighbours(l, r, false)) scratch.degrade_to_best(id, Anchor::kRight);
    std::tie(lo, hi) = scratch.region(l, r);
    if (hi - lo + 1 < l0.theta) return std::nullopt;
  }

  plan.first_slot = lo;
  const int last = lo + l0.theta - 1;
  // Keep only degradations that actually vacate part of the new span.
  for (const auto& [id, change] : scratch.changes) {
    const auto& lp = net.lightpath(id);
    if (lp.first_slot <= last && lp.last_slot >= lo) {
      plan.degradations.push_back(change);
      if (change.anchor == Anchor::kRight) plan.double_side = true;
    }
  }
  return plan;
}

LightpathId apply_establishment(MultiLayerNet& net, const EstablishmentPlan& plan) {
  for (const auto& d : plan.degradations) {
    net.reshape_lightpath(d.id, d.first_slot, d.last_slot, d.new_level);
  }
  return net.add_lightpath(plan.route, plan.first_slot, plan.slot_count, plan.level);
}

std::optional<std::vector<LightpathId>> groom_route(const MultiLayerNet& net, NodeId s, NodeId d,
                                                    double gbps) {
  std::vector<LightpathId> via(static_cast<std::size_t>(net.node_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(net.node_count()), 0);
  std::deque<NodeId> queue{s};
  seen[s] = 1;
  while (!queue.empty() && !seen[d]) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (auto id : net.lightpaths_from(u)) {
      const auto& lp = net.lightpath(id);
      if (seen[lp.dst] || lp.free_gbps() + 1e-9 < gbps) continue;
      seen[lp.dst] = 1;
      via[lp.dst] = id;
      queue.push_back(lp.dst);
    }
  }
  if (!seen[d]) return std::nullopt;
  std::vector<LightpathId> route;
  for (NodeId at = d; at != s; at = net.lightpath(route.back()).src) route.push_back(via[at]);
  std::reverse(route.begin(), route.end());
  return route;
}

std::optional<ProvisionOutcome> establish_lightpath(MultiLayerNet& net,
                                                    const ServiceRequest& request,
                                                    const ProvisionOptions& options) {
  auto fiber_route = degraded_route(optical_view(net), options.fiber_routing, request.src,
                                    request.dst, 0, options.limits);
  if (!fiber_route) return std::nullopt;
  const auto fibers = fiber_route->link_ids();
  const double km = net.route_length(fibers);
  const int level = new_lightpath_level(net, km, options);
  if (level == 0) return std::nullopt;
  const int slots = net.modulation().slots_for(std::max(request.bw, options.threshold_gbps), level);
  const auto start = first_fit(net, fibers, slots);
  if (!start) return std::nullopt;
  const auto id = net.add_lightpath(fibers, *start, slots, level);
  return ProvisionOutcome{ProvisionKind::kNewLightpath, {id}, {}, std::move(fiber_route)};
}

std::optional<ProvisionOutcome> establish_with_degradation(MultiLayerNet& net,
                                                           const ServiceRequest& request,
                                                           const ProvisionOptions& options) {
  // Size the demand at the level a new lightpath would use on the shortest
  // fiber route so the aux graph can tell which fibers have room.
  const auto& table = net.modulation();
  const double capacity = std::max(request.bw, options.threshold_gbps);
  const int nominal_slots = table.slots_for(capacity, table.default_level());
  auto fiber_route = degraded_route(optical_view(net), options.fiber_routing, request.src,
                                    request.dst, nominal_slots, options.limits);
  if (!fiber_route) return std::nullopt;
  const auto fibers = fiber_route->link_ids();
  const double km = net.route_length(fibers);
  const int level = new_lightpath_level(net, km, options);
  if (level == 0) return std::nullopt;
  const LightpathRequest l0{request.src, request.dst, table.slots_for(capacity, level), level};
  auto plan = od_msa(net, fibers, l0, km);
  if (!plan) return std::nullopt;
  const auto id = apply_establishment(net, *plan);
  return ProvisionOutcome{ProvisionKind::kDegradedLightpath, {id}, plan->degradations,
                          std::move(fiber_route)};
}

std::optional<ProvisionOutcome> provision_lightpath_layer(MultiLayerNet& net,
                                                          const ServiceRequest& request,
                                                          const ProvisionOptions& options) {
  if (auto route = groom_route(net, request.src, request.dst, request.bw)) {
    return ProvisionOutcome{ProvisionKind::kGroomed, std::move(*route), {}, std::nullopt};
  }
  if (auto made = establish_lightpath(net, request, options)) return made;
  if (options.optical_degradation) return establish_with_degradation(net, request, options);
  return std::nullopt;
}

}  // namespace eon
