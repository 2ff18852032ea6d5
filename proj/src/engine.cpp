#include "eon/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "eon/layer.hpp"

namespace eon {
namespace {

constexpr double kTimeEps = 1e-9;

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

}  // namespace

// ---- policies ----

std::string PolicyConfig::name() const {
  if (layers == DegradationLayers::kNone) return "baseline";
  std::string prefix = layers == DegradationLayers::kBoth       ? "OE"
                       : layers == DegradationLayers::kOptical ? "O"
                                                               : "E";
  return prefix + "-" + std::string(to_string(routing));
}

PolicyConfig PolicyConfig::parse(std::string_view name) {
  for (const auto& p : all())
    if (p.name() == name) return p;
  throw std::invalid_argument("unknown policy: " + std::string(name));
}

std::vector<PolicyConfig> PolicyConfig::all() {
  using L = DegradationLayers;
  using R = RoutingPolicy;
  return {{L::kNone, R::kMinRH},     {L::kBoth, R::kMinPDR},    {L::kOptical, R::kMinPDR},
          {L::kElectric, R::kMinPDR}, {L::kBoth, R::kMinRH},     {L::kOptical, R::kMinRH},
          {L::kElectric, R::kMinRH}};
}

// ---- event queue ----

void EventQueue::push_arrival(double time, RequestId id) {
  events_.insert({time, SimEvent::Kind::kArrival, id});
}

void EventQueue::schedule_departure(RequestId id, double time) {
  if (departures_.contains(id))
    throw std::logic_error("departure already scheduled for request " + std::to_string(id));
  departures_[id] = time;
  events_.insert({time, SimEvent::Kind::kDeparture, id});
}

void EventQueue::reschedule_departure(RequestId id, double time) {
  auto it = departures_.find(id);
  if (it == departures_.end())
    throw std::logic_error("no departure scheduled for request " + std::to_string(id));
  events_.erase({it->second, SimEvent::Kind::kDeparture, id});
  it->second = time;
  events_.insert({time, SimEvent::Kind::kDeparture, id});
}

void EventQueue::reschedule_after_degradation(const AllocationPlan& plan) {
  for (const auto& change : plan.degraded) reschedule_departure(change.id, change.new_finish);
}

std::optional<double> EventQueue::departure_time(RequestId id) const {
  auto it = departures_.find(id);
  if (it == departures_.end()) return std::nullopt;
  return it->second;
}

SimEvent EventQueue::pop() {
  if (events_.empty()) throw std::logic_error("pop on empty event queue");
  SimEvent ev = *events_.begin();
  events_.erase(events_.begin());
  if (ev.kind == SimEvent::Kind::kDeparture) departures_.erase(ev.id);
  return ev;
}

// ---- report ----

std::string SimulationReport::summary() const {
  std::ostringstream out;
  out << "policy " << policy << "\n"
      << "arrivals " << arrivals << " admitted " << admitted << " blocked " << blocked << "\n"
      << "via conventional " << via_conventional << " electric " << via_electric << " optical "
      << via_optical << "\n"
      << "requests degraded " << requests_degraded << " lightpaths degraded "
      << lightpaths_degraded << "\n"
      << "bbp " << bbp;
  for (std::size_t p = 1; p < bbp_by_priority.size(); ++p)
    out << " p" << p << "=" << bbp_by_priority[p];
  out << "\n";
  return out.str();
}

// ---- simulator ----

Simulator::Simulator(MultiLayerNet net, PolicyConfig policy, EngineConfig config)
    : net_(std::move(net)),
      policy_(policy),
      config_(config),
      metrics_(config.window_h, config.priorities) {
  if (config_.threshold_gbps < 0) throw std::invalid_argument("threshold must be >= 0");
  report_.policy = policy_.name();
  report_.trace_digest = 14695981039346656037ull;
}

void Simulator::trace(const std::string& line) {
  report_.trace_digest = fnv1a(report_.trace_digest, line);
  report_.trace_digest = fnv1a(report_.trace_digest, "\n");
  if (config_.record_trace) {
    report_.trace += line;
    report_.trace += '\n';
  }
}

void Simulator::admit(const ServiceRequest& r0, std::vector<LightpathId> route, double rate,
                      double now) {
  net_.admit_request(r0, std::move(route), rate, now);
  carried_gbps_ += rate;
  queue_.schedule_departure(r0.id, net_.request(r0.id).finish_time());
}

bool Simulator::admit_conventional(const ServiceRequest& r0, double now) {
  if (auto route = groom_route(net_, r0.src, r0.dst, r0.bw)) {
    admit(r0, std::move(*route), r0.bw, now);
    ++report_.groomed;
    return true;
  }
  ProvisionOptions options;
  options.threshold_gbps = config_.threshold_gbps;
  options.modulation = config_.modulation;
  options.fiber_routing = RoutingPolicy::kMinRH;
  options.limits = config_.limits;
  if (auto made = establish_lightpath(net_, r0, options)) {
    admit(r0, std::move(made->route), r0.bw, now);
    ++report_.lightpaths_created;
    return true;
  }
  return false;
}

void Simulator::audit(Layer layer, const ServiceRequest& r0, double needed) {
  const auto view = make_view(net_, layer);
  auto rh = min_rh_route(view, r0.src, r0.dst, needed, config_.limits);
  auto pdr = min_pdr_route(view, r0.src, r0.dst, needed, config_.limits);
  if (!rh || !pdr) return;
  auto& a = layer == Layer::kElectric ? report_.electric_audit : report_.optical_audit;
  ++a.instances;
  a.rh_min_rh += rh->rh;
  a.pdr_min_rh += rh->pdr;
  a.rh_min_pdr += pdr->rh;
  a.pdr_min_pdr += pdr->pdr;
  if (rh->rh > pdr->rh || pdr->pdr > rh->pdr) ++a.violations;
  if (!pdr->proven_optimal) ++a.unproven;
}

bool Simulator::admit_electric(const ServiceRequest& r0, double now) {
  if (config_.audit_routes) audit(Layer::kElectric, r0, 0);
  const auto view = electric_view(net_);
  auto route = degraded_route(view, policy_.routing, r0.src, r0.dst, 0, config_.limits);
  if (!route) return false;
  auto plan = ed_ba(net_, *route, r0, now);
  if (!plan) return false;
  for (const auto& change : plan->degraded) {
    if (change.new_finish > net_.request(change.id).latest_finish() + kTimeEps)
      throw std::logic_error("degradation pushes a request past its deadline");
    carried_gbps_ += change.new_rate - change.old_rate;
  }
  apply_allocation(net_, r0, *plan, now);
  carried_gbps_ += plan->admitted_rate;
  queue_.reschedule_after_degradation(*plan);
  queue_.schedule_departure(r0.id, net_.request(r0.id).finish_time());
  report_.requests_degraded += static_cast<long>(plan->degraded.size());
  if (plan->arrival_degraded(r0)) ++report_.arrivals_degraded;
  return true;
}

bool Simulator::admit_optical(const ServiceRequest& r0, double now) {
  ProvisionOptions options;
  options.threshold_gbps = config_.threshold_gbps;
  options.modulation = config_.modulation;
  options.fiber_routing = policy_.routing;
  options.optical_degradation = true;
  options.limits = config_.limits;
  if (config_.audit_routes) {
    const auto& table = net_.modulation();
    audit(Layer::kOptical, r0,
          table.slots_for(std::max(r0.bw, options.threshold_gbps), table.default_level()));
  }
  auto made = establish_with_degradation(net_, r0, options);
  if (!made) return false;
  admit(r0, std::move(made->route), r0.bw, now);
  ++report_.lightpaths_created;
  report_.lightpaths_degraded += static_cast<long>(made->degradations.size());
  return true;
}

ArrivalOutcome Simulator::on_arrival(const ServiceRequest& r0, double now) {
  if (r0.src == r0.dst || r0.bw <= 0 || r0.holding <= 0)
    throw std::invalid_argument("malformed request " + std::to_string(r0.id));
  ++report_.arrivals;
  ArrivalOutcome outcome = ArrivalOutcome::kBlocked;
  if (admit_conventional(r0, now)) {
    ++report_.via_conventional;
    outcome = ArrivalOutcome::kAdmitted;
  } else {
    const bool optical_first = config_.oe_order == OeOrder::kOpticalFirst;
    for (int step = 0; step < 2 && outcome == ArrivalOutcome::kBlocked; ++step) {
      const bool electric = (step == 0) != optical_first;
      if (electric && policy_.electric() && admit_electric(r0, now)) {
        ++report_.via_electric;
        outcome = ArrivalOutcome::kAdmittedDegraded;
      } else if (!electric && policy_.optical() && admit_optical(r0, now)) {
        ++report_.via_optical;
        outcome = ArrivalOutcome::kAdmittedDegraded;
      }
    }
  }
  if (outcome == ArrivalOutcome::kBlocked)
    ++report_.blocked;
  else
    ++report_.admitted;
  metrics_.record_arrival(r0, outcome == ArrivalOutcome::kBlocked);
  return outcome;
}

ServiceRequest Simulator::on_departure(RequestId id, double now) {
  auto r = net_.release_request(id, now);
  carried_gbps_ -= r.rate;
  const double scale = std::max(1.0, r.latest_finish());
  if (now > r.latest_finish() + kTimeEps * scale)
    throw std::logic_error("request " + std::to_string(id) + " finished past its deadline");
  const double delivered = r.delivered_at(now);
  if (std::abs(delivered - r.volume()) > 1e-7 * std::max(1.0, r.volume()))
    throw std::logic_error("request " + std::to_string(id) + " delivered " +
                           std::to_string(delivered) + " of " + std::to_string(r.volume()));
  ++report_.departures;
  report_.delivered_volume += r.volume();
  return r;
}

SimulationReport Simulator::run(std::span<const ServiceRequest> workload) {
  std::unordered_map<RequestId, const ServiceRequest*> by_id;
  by_id.reserve(workload.size());
  for (const auto& r : workload) {
    if (!by_id.emplace(r.id, &r).second)
      throw std::invalid_argument("duplicate request id " + std::to_string(r.id));
    queue_.push_arrival(r.arrival, r.id);
  }
  while (!queue_.empty()) {
    const SimEvent ev = queue_.pop();
    metrics_.advance(ev.time, std::max(0.0, carried_gbps_));
    if (ev.kind == SimEvent::Kind::kArrival) {
      const auto outcome = on_arrival(*by_id.at(ev.id), ev.time);
      const char* tag = outcome == ArrivalOutcome::kBlocked            ? "blocked"
                        : outcome == ArrivalOutcome::kAdmittedDegraded ? "degraded"
                                                                       : "admitted";
      trace(fmt("%.17g", ev.time) + " A " + std::to_string(ev.id) + " " + tag);
    } else {
      on_departure(ev.id, ev.time);
      trace(fmt("%.17g", ev.time) + " D " + std::to_string(ev.id));
      // Resync the running sum so rounding cannot drift.
      if (net_.requests().empty()) carried_gbps_ = 0;
    }
    if (config_.check_invariants) {
      net_.check_consistency();
      if (std::abs(carried_gbps_ - net_.carried_gbps()) > 1e-6 * std::max(1.0, carried_gbps_))
        throw std::logic_error("carried rate bookkeeping drifted");
    }
  }

  report_.bbp = metrics_.bbp();
  const int priorities = metrics_.priorities();
  report_.offered_by_priority.assign(priorities + 1, 0.0);
  report_.blocked_by_priority.assign(priorities + 1, 0.0);
  report_.bbp_by_priority.assign(priorities + 1, 0.0);
  for (int p = 1; p <= priorities; ++p) {
    report_.offered_by_priority[p] = metrics_.offered(p);
    report_.blocked_by_priority[p] = metrics_.blocked(p);
    report_.bbp_by_priority[p] = metrics_.bbp(p);
  }
  report_.series = metrics_.instantaneous_series();
  report_.carried_volume = metrics_.carried_volume();
  return report_;
}

SimulationReport run(MultiLayerNet net, std::span<const ServiceRequest> workload,
                     PolicyConfig policy, EngineConfig config) {
  Simulator sim(std::move(net), policy, config);
  return sim.run(workload);
}

}  // namespace eon
