#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eon/electric.hpp"
#include "eon/metrics.hpp"
#include "eon/network.hpp"
#include "eon/optical.hpp"
#include "eon/routing.hpp"

namespace eon {

enum class DegradationLayers { kNone, kElectric, kOptical, kBoth };

// Baseline (threshold grooming, no degradation) or one of the six
// degradation policies: {E, O, OE} x {MinRH, MinPDR}.
struct PolicyConfig {
  DegradationLayers layers = DegradationLayers::kNone;
  RoutingPolicy routing = RoutingPolicy::kMinRH;

  bool electric() const {
    return layers == DegradationLayers::kElectric || layers == DegradationLayers::kBoth;
  }
  bool optical() const {
    return layers == DegradationLayers::kOptical || layers == DegradationLayers::kBoth;
  }
  std::string name() const;
  static PolicyConfig parse(std::string_view name);
  static std::vector<PolicyConfig> all();

  bool operator==(const PolicyConfig&) const = default;
};

// Which degradation layer a both-layer policy tries first.
enum class OeOrder { kElectricFirst, kOpticalFirst };

struct EngineConfig {
  double threshold_gbps = 150;
  double window_h = 0.05;
  int priorities = 5;
  OeOrder oe_order = OeOrder::kElectricFirst;
  NewLightpathModulation modulation = NewLightpathModulation::kDefaultLevel;
  SearchLimits limits;
  bool audit_routes = false;      // evaluate both routing policies on every degraded-routing call
  bool record_trace = false;      // keep the event trace text in the report
  bool check_invariants = false;  // full network rescan after every event
};

struct SimEvent {
  enum class Kind { kDeparture = 0, kArrival = 1 };
  double time = 0;
  Kind kind = Kind::kArrival;
  std::int64_t id = 0;

  // Time order; departures before arrivals at equal times, then by id.
  auto operator<=>(const SimEvent&) const = default;
};

class EventQueue {
 public:
  void push_arrival(double time, RequestId id);
  void schedule_departure(RequestId id, double time);
  void reschedule_departure(RequestId id, double time);
  // Moves the departures of every request the plan slowed down.
  void reschedule_after_degradation(const AllocationPlan& plan);

  std::optional<double> departure_time(RequestId id) const;
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }
  const SimEvent& top() const { return *events_.begin(); }
  SimEvent pop();
  std::vector<SimEvent> snapshot() const { return {events_.begin(), events_.end()}; }

 private:
  std::set<SimEvent> events_;
  std::unordered_map<RequestId, double> departures_;
};

enum class ArrivalOutcome { kAdmitted, kAdmittedDegraded, kBlocked };

// Route metrics of both routing policies evaluated on the same instances.
struct RouteAudit {
  long instances = 0;
  double rh_min_rh = 0;
  double pdr_min_rh = 0;
  double rh_min_pdr = 0;
  double pdr_min_pdr = 0;
  long violations = 0;  // instances where either dominance failed
  long unproven = 0;    // MinPDR searches that hit the expansion cap

  double mean(double sum) const { return instances > 0 ? sum / instances : 0.0; }
};

struct SimulationReport {
  std::string policy;
  long arrivals = 0;
  long admitted = 0;
  long blocked = 0;
  long via_conventional = 0;
  long via_electric = 0;
  long via_optical = 0;
  long groomed = 0;
  long lightpaths_created = 0;
  long requests_degraded = 0;    // rate reductions applied to existing requests
  long arrivals_degraded = 0;    // arrivals admitted below their requested rate
  long lightpaths_degraded = 0;  // modulation raises applied to existing lightpaths
  long departures = 0;
  std::vector<double> offered_by_priority;  // index 0 unused
  std::vector<double> blocked_by_priority;
  double bbp = 0;
  std::vector<double> bbp_by_priority;  // index 0 unused
  std::vector<SeriesPoint> series;
  double carried_volume = 0;    // integral of carried rate, Gbps*h
  double delivered_volume = 0;  // volume of completed requests
  RouteAudit electric_audit;
  RouteAudit optical_audit;
  std::uint64_t trace_digest = 0;
  std::string trace;

  std::string summary() const;
};

class Simulator {
 public:
  Simulator(MultiLayerNet net, PolicyConfig policy, EngineConfig config = {});

  // Processes the workload and everything it triggers to completion.
  SimulationReport run(std::span<const ServiceRequest> workload);

  ArrivalOutcome on_arrival(const ServiceRequest& r0, double now);
  ServiceRequest on_departure(RequestId id, double now);

  const MultiLayerNet& network() const { return net_; }
  const EventQueue& queue() const { return queue_; }
  const MetricsAccumulator& metrics() const { return metrics_; }
  const SimulationReport& report() const { return report_; }

 private:
  bool admit_conventional(const ServiceRequest& r0, double now);
  bool admit_electric(const ServiceRequest& r0, double now);
  bool admit_optical(const ServiceRequest& r0, double now);
  void admit(const ServiceRequest& r0, std::vector<LightpathId> route, double rate, double now);
  void audit(Layer layer, const ServiceRequest& r0, double needed);
  void trace(const std::string& line);

  MultiLayerNet net_;
  PolicyConfig policy_;
  EngineConfig config_;
  EventQueue queue_;
  MetricsAccumulator metrics_;
  SimulationReport report_;
  double carried_gbps_ = 0;
};

SimulationReport run(MultiLayerNet net, std::span<const ServiceRequest> workload,
                     PolicyConfig policy, EngineConfig config = {});

}  // namespace eon
