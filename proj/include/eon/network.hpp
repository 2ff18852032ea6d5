#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eon/modulation.hpp"
#include "eon/spectrum.hpp"
#include "eon/types.hpp"

namespace eon {

struct FiberLink {
  FiberId id = 0;
  NodeId from = 0;
  NodeId to = 0;
  double length_km = 0;
  SpectrumMask spectrum;
};

// Optical channel; doubles as a link of the electric (virtual) layer.
struct Lightpath {
  LightpathId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  std::vector<FiberId> fibers;
  std::vector<NodeId> nodes;
  int first_slot = 0;  // 1-based, inclusive
  int last_slot = 0;
  int level = 2;
  double length_km = 0;
  double capacity_gbps = 0;
  std::map<RequestId, double> groomed;  // reserved Gbps per request

  int slot_count() const { return last_slot - first_slot + 1; }
  double reserved_gbps() const;
  double free_gbps() const { return capacity_gbps - reserved_gbps(); }
};

// Electric-layer service demand. The first block is fixed at arrival; the
// second block tracks transmission while the request is active.
struct ServiceRequest {
  RequestId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  double bw = 0;         // requested rate, Gbps
  double arrival = 0;    // hours
  double holding = 0;    // nominal holding time at full rate, hours
  double deadline = 0;   // prolongation allowance beyond `holding`, hours
  int priority = 1;      // 1..5, 5 is highest
  double tolerance = 1;  // lowest acceptable fraction of `bw`

  double rate = 0;        // current transmission rate, Gbps
  double delivered = 0;   // volume delivered up to `rate_since`, Gbps*h
  double rate_since = 0;  // time `rate` took effect
  std::vector<LightpathId> route;

  double volume() const { return bw * holding; }
  double latest_finish() const { return arrival + holding + deadline; }
  double min_rate() const { return bw * tolerance; }
  double delivered_at(double t) const { return delivered + rate * (t - rate_since); }
  double remaining_at(double t) const;
  double finish_time() const;
  bool degraded() const { return rate < bw; }
};

// Three-layer state: fibers with spectrum, lightpaths (electric layer) and
// active service requests (service layer).
class MultiLayerNet {
 public:
  MultiLayerNet(int node_count, int slots,
                ModulationTable modulation = ModulationTable::standard());

  int node_count() const { return node_count_; }
  int slots() const { return slots_; }
  const ModulationTable& modulation() const { return modulation_; }

  FiberId add_fiber(NodeId from, NodeId to, double length_km);
  const std::vector<FiberLink>& fibers() const { return fibers_; }
  const FiberLink& fiber(FiberId id) const;
  std::optional<FiberId> find_fiber(NodeId from, NodeId to) const;
  const std::vector<FiberId>& out_fibers(NodeId node) const;
  double route_length(std::span<const FiberId> route) const;
  // Node sequence of a fiber route; throws unless the fibers chain up.
  std::vector<NodeId> route_nodes(std::span<const FiberId> route) const;

  const std::map<LightpathId, Lightpath>& lightpaths() const { return lightpaths_; }
  const Lightpath& lightpath(LightpathId id) const;
  const std::set<LightpathId>& lightpaths_on(FiberId id) const;
  const std::set<LightpathId>& lightpaths_from(NodeId node) const;

  const std::map<RequestId, ServiceRequest>& requests() const { return requests_; }
  const ServiceRequest& request(RequestId id) const;
  bool has_request(RequestId id) const { return requests_.contains(id); }

  // Occupies [first_slot, first_slot + slot_count) on every fiber of `route`.
  LightpathId add_lightpath(std::vector<FiberId> route, int first_slot, int slot_count,
                            int level);
  // Moves a lightpath to a new span and level; used for degradation.
  void reshape_lightpath(LightpathId id, int first_slot, int last_slot, int level);
  void remove_lightpath(LightpathId id);

  void admit_request(ServiceRequest request, std::vector<LightpathId> route, double rate,
                     double now);
  void set_request_rate(RequestId id, double rate, double now);
  // Releases reservations and tears down lightpaths left carrying nothing.
  ServiceRequest release_request(RequestId id, double now,
                                 std::vector<LightpathId>* torn_down = nullptr);

  // Sum of current rates of active requests.
  double carried_gbps() const;

  // Full rescan of every cross-layer invariant; throws std::logic_error.
  void check_consistency() const;

 private:
  int node_count_;
  int slots_;
  ModulationTable modulation_;
  std::vector<FiberLink> fibers_;
  std::vector<std::vector<FiberId>> out_fibers_;
  std::map<std::pair<NodeId, NodeId>, FiberId> fiber_index_;
  std::map<LightpathId, Lightpath> lightpaths_;
  std::vector<std::set<LightpathId>> fiber_lightpaths_;
  std::vector<std::set<LightpathId>> lightpaths_from_;
  std::map<RequestId, ServiceRequest> requests_;
  LightpathId next_lightpath_id_ = 1;
};

}  // namespace eon
