#include "eon/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eon {
namespace {

constexpr double kRateEps = 1e-9;

[[noreturn]] void inconsistent(const std::string& what) {
  throw std::logic_error("network state inconsistent: " + what);
}

}  // namespace

double Lightpath::reserved_gbps() const {
  double sum = 0;
  for (const auto& [id, gbps] : groomed) sum += gbps;
  return sum;
}

double ServiceRequest::remaining_at(double t) const {
  return std::max(0.0, volume() - delivered_at(t));
}

double ServiceRequest::finish_time() const {
  return rate_since + std::max(0.0, volume() - delivered) / rate;
}

MultiLayerNet::MultiLayerNet(int node_count, int slots, ModulationTable modulation)
    : node_count_(node_count),
      slots_(slots),
      modulation_(std::move(modulation)),
      out_fibers_(static_cast<std::size_t>(std::max(node_count, 0))),
      lightpaths_from_(static_cast<std::size_t>(std::max(node_count, 0))) {
  if (node_count < 1) throw std::invalid_argument("network needs at least one node");
  if (slots < 1) throw std::invalid_argument("fibers need at least one spectrum slot");
}

FiberId MultiLayerNet::add_fiber(NodeId from, NodeId to, double length_km) {
  if (from < 0 || to < 0 || from >= node_count_ || to >= node_count_) {
    throw std::invalid_argument("fiber endpoint out of range");
  }
  if (from == to) throw std::invalid_argument("self-loop fiber at node " + std::to_string(from));
  if (!(length_km > 0)) throw std::invalid_argument("fiber length must be positive");
  if (fiber_index_.contains({from, to})) {
    throw std::invalid_argument("duplicate fiber " + std::to_string(from) + "->" +
                                std::to_string(to));
  }
  const auto id = static_cast<FiberId>(fibers_.size());
  fibers_.push_back({id, from, to, length_km, SpectrumMask(slots_)});
  out_fibers_[from].push_back(id);
  fiber_index_[{from, to}] = id;
  fiber_lightpaths_.emplace_back();
  return id;
}

const FiberLink& MultiLayerNet::fiber(FiberId id) const {
  if (id < 0 || id >= static_cast<FiberId>(fibers_.size())) {
    throw std::out_of_range("unknown fiber " + std::to_string(id));
  }
  return fibers_[static_cast<std::size_t>(id)];
}

std::optional<FiberId> MultiLayerNet::find_fiber(NodeId from, NodeId to) const {
  auto it = fiber_index_.find({from, to});
  if (it == fiber_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<FiberId>& MultiLayerNet::out_fibers(NodeId node) const {
  return out_fibers_.at(static_cast<std::size_t>(node));
}

double MultiLayerNet::route_length(std::span<const FiberId> route) const {
  double km = 0;
  for (auto f : route) km += fiber(f).length_km;
  return km;
}

std::vector<NodeId> MultiLayerNet::route_nodes(std::span<const FiberId> route) const {
  if (route.empty()) throw std::invalid_argument("empty fiber route");
  std::vector<NodeId> nodes{fiber(route.front()).from};
  for (auto f : route) {
    const auto& link = fiber(f);
    if (link.from != nodes.back()) throw std::invalid_argument("fiber route is not connected");
    if (std::find(nodes.begin(), nodes.end(), link.to) != nodes.end()) {
      throw std::invalid_argument("fiber route revisits a node");
    }
    nodes.push_back(link.to);
  }
  return nodes;
}

const Lightpath& MultiLayerNet::lightpath(LightpathId id) const {
  auto it = lightpaths_.find(id);
  if (it == lightpaths_.end()) throw std::out_of_range("unknown lightpath " + std::to_string(id));
  return it->second;
}

const std::set<LightpathId>& MultiLayerNet::lightpaths_on(FiberId id) const {
  fiber(id);
  return fiber_lightpaths_[static_cast<std::size_t>(id)];
}

const std::set<LightpathId>& MultiLayerNet::lightpaths_from(NodeId node) const {
  return lightpaths_from_.at(static_cast<std::size_t>(node));
}

const ServiceRequest& MultiLayerNet::request(RequestId id) const {
  auto it = requests_.find(id);
  if (it == requests_.end()) throw std::out_of_range("unknown request " + std::to_string(id));
  return it->second;
}

LightpathId MultiLayerNet::add_lightpath(std::vector<FiberId> route, int first_slot,
                                         int slot_count, int level) {
  auto nodes = route_nodes(route);
  const int last_slot = first_slot + slot_count - 1;
  if (slot_count < 1) throw std::invalid_argument("lightpath needs at least one slot");
  for (auto f : route) {
    if (!fiber(f).spectrum.range_free(first_slot, last_slot)) {
      throw std::invalid_argument("lightpath spectrum overlaps on fiber " + std::to_string(f));
    }
  }
  const double km = route_length(route);
  if (km > modulation_.reach(level)) {
    throw std::invalid_argument("lightpath exceeds reach of modulation level " +
                                std::to_string(level));
  }
  Lightpath lp;
  lp.id = next_lightpath_id_++;
  lp.src = nodes.front();
  lp.dst = nodes.back();
  lp.nodes = std::move(nodes);
  lp.fibers = std::move(route);
  lp.first_slot = first_slot;
  lp.last_slot = last_slot;
  lp.level = level;
  lp.length_km = km;
  lp.capacity_gbps = slot_count * modulation_.rate_per_slot(level);
  for (auto f : lp.fibers) {
    fibers_[static_cast<std::size_t>(f)].spectrum.set(first_slot, last_slot);
    fiber_lightpaths_[static_cast<std::size_t>(f)].insert(lp.id);
  }
  lightpaths_from_[lp.src].insert(lp.id);
  const auto id = lp.id;
  lightpaths_.emplace(id, std::move(lp));
  return id;
}

void MultiLayerNet::reshape_lightpath(LightpathId id, int first_slot, int last_slot, int level) {
  auto it = lightpaths_.find(id);
  if (it == lightpaths_.end()) throw std::out_of_range("unknown lightpath " + std::to_string(id));
  Lightpath& lp = it->second;
  if (lp.length_km > modulation_.reach(level)) {
    throw std::invalid_argument("reshape violates reach of modulation level " +
                                std::to_string(level));
  }
  const double capacity = (last_slot - first_slot + 1) * modulation_.rate_per_slot(level);
  if (capacity + kRateEps < lp.reserved_gbps()) {
    throw std::invalid_argument("reshape would strand groomed traffic");
  }
  for (auto f : lp.fibers) fibers_[static_cast<std::size_t>(f)].spectrum.clear(lp.first_slot, lp.last_slot);
  bool fits = true;
  for (auto f : lp.fibers) {
    if (!fibers_[static_cast<std::size_t>(f)].spectrum.range_free(first_slot, last_slot)) fits = false;
  }
  if (!fits) {
    for (auto f : lp.fibers) fibers_[static_cast<std::size_t>(f)].spectrum.set(lp.first_slot, lp.last_slot);
    throw std::invalid_argument("reshape overlaps other lightpaths");
  }
  for (auto f : lp.fibers) fibers_[static_cast<std::size_t>(f)].spectrum.set(first_slot, last_slot);
  lp.first_slot = first_slot;
  lp.last_slot = last_slot;
  lp.level = level;
  lp.capacity_gbps = capacity;
}

void MultiLayerNet::remove_lightpath(LightpathId id) {
  auto it = lightpaths_.find(id);
  if (it == lightpaths_.end()) throw std::out_of_range("unknown lightpath " + std::to_string(id));
  if (!it->second.groomed.empty()) throw std::logic_error("lightpath still carries traffic");
  for (auto f : it->second.fibers) {
    fibers_[static_cast<std::size_t>(f)].spectrum.clear(it->second.first_slot, it->second.last_slot);
    fiber_lightpaths_[static_cast<std::size_t>(f)].erase(id);
  }
  lightpaths_from_[it->second.src].erase(id);
  lightpaths_.erase(it);
}

void MultiLayerNet::admit_request(ServiceRequest request, std::vector<LightpathId> route,
                                  double rate, double now) {
  if (requests_.contains(request.id)) {
    throw std::invalid_argument("request " + std::to_string(request.id) + " already active");
  }
  if (route.empty()) throw std::invalid_argument("request route is empty");
  if (rate > request.bw + kRateEps || rate + kRateEps < request.min_rate()) {
    throw std::invalid_argument("admission rate outside the request's tolerance");
  }
  NodeId at = request.src;
  for (auto lid : route) {
    const auto& lp = lightpath(lid);
    if (lp.src != at) throw std::invalid_argument("request route is not connected");
    if (lp.free_gbps() + kRateEps < rate) {
      throw std::invalid_argument("lightpath " + std::to_string(lid) + " lacks capacity");
    }
    at = lp.dst;
  }
  if (at != request.dst) throw std::invalid_argument("request route ends at the wrong node");

  request.rate = rate;
  request.delivered = 0;
  request.rate_since = now;
  request.route = std::move(route);
  for (auto lid : request.route) lightpaths_[lid].groomed[request.id] = rate;
  requests_.emplace(request.id, std::move(request));
}

void MultiLayerNet::set_request_rate(RequestId id, double rate, double now) {
  auto it = requests_.find(id);
  if (it == requests_.end()) throw std::out_of_range("unknown request " + std::to_string(id));
  ServiceRequest& r = it->second;
  if (rate <= 0 || rate + kRateEps < r.min_rate() || rate > r.bw + kRateEps) {
    throw std::invalid_argument("rate outside the request's tolerance");
  }
  for (auto lid : r.route) {
    const auto& lp = lightpaths_.at(lid);
    if (lp.free_gbps() + r.rate + kRateEps < rate) {
      throw std::invalid_argument("rate change exceeds lightpath capacity");
    }
  }
  r.delivered = r.delivered_at(now);
  r.rate_since = now;
  r.rate = rate;
  for (auto lid : r.route) lightpaths_[lid].groomed[id] = rate;
}

ServiceRequest MultiLayerNet::release_request(RequestId id, double now,
                                              std::vector<LightpathId>* torn_down) {
  auto it = requests_.find(id);
  if (it == requests_.end()) throw std::out_of_range("unknown request " + std::to_string(id));
  ServiceRequest r = std::move(it->second);
  requests_.erase(it);
  r.delivered = r.delivered_at(now);
  r.rate_since = now;
  for (auto lid : r.route) {
    auto& lp = lightpaths_.at(lid);
    lp.groomed.erase(id);
    if (lp.groomed.empty()) {
      remove_lightpath(lid);
      if (torn_down) torn_down->push_back(lid);
    }
  }
  return r;
}

double MultiLayerNet::carried_gbps() const {
  double sum = 0;
  for (const auto& [id, r] : requests_) sum += r.rate;
  return sum;
}

void MultiLayerNet::check_consistency() const {
  std::vector<SpectrumMask> expected(fibers_.size(), SpectrumMask(slots_));
  for (const auto& [id, lp] : lightpaths_) {
    if (lp.first_slot < 1 || lp.last_slot > slots_ || lp.first_slot > lp.last_slot) {
      inconsistent("lightpath " + std::to_string(id) + " has an invalid span");
    }
    if (route_nodes(lp.fibers) != lp.nodes) inconsistent("lightpath node list mismatch");
    if (lp.length_km > modulation_.reach(lp.level) + 1e-9) {
      inconsistent("lightpath " + std::to_string(id) + " exceeds modulation reach");
    }
    if (lp.reserved_gbps() > lp.capacity_gbps + 1e-6) {
      inconsistent("lightpath " + std::to_string(id) + " is over-reserved");
    }
    for (auto f : lp.fibers) {
      auto& mask = expected[static_cast<std::size_t>(f)];
      for (int s = lp.first_slot; s <= lp.last_slot; ++s) {
        if (mask.used(s)) inconsistent("spectrum overlap on fiber " + std::to_string(f));
      }
      mask.set(lp.first_slot, lp.last_slot);
      if (!fiber_lightpaths_[static_cast<std::size_t>(f)].contains(id)) {
        inconsistent("fiber index misses lightpath " + std::to_string(id));
      }
    }
    for (const auto& [rid, gbps] : lp.groomed) {
      auto rit = requests_.find(rid);
      if (rit == requests_.end()) inconsistent("lightpath grooms an inactive request");
      if (std::abs(rit->second.rate - gbps) > 1e-9) inconsistent("reservation differs from rate");
    }
  }
  for (std::size_t f = 0; f < fibers_.size(); ++f) {
    if (!(expected[f] == fibers_[f].spectrum)) {
      inconsistent("fiber " + std::to_string(f) + " mask differs from resident lightpaths");
    }
  }
  for (const auto& [id, r] : requests_) {
    NodeId at = r.src;
    for (auto lid : r.route) {
      auto lit = lightpaths_.find(lid);
      if (lit == lightpaths_.end() || lit->second.src != at) {
        inconsistent("request " + std::to_string(id) + " route is broken");
      }
      if (!lit->second.groomed.contains(id)) inconsistent("missing reservation");
      at = lit->second.dst;
    }
    if (at != r.dst) inconsistent("request " + std::to_string(id) + " route ends elsewhere");
    if (r.rate + 1e-9 < r.min_rate() || r.rate > r.bw + 1e-9) {
      inconsistent("request " + std::to_string(id) + " rate outside tolerance");
    }
  }
}

}  // namespace eon
