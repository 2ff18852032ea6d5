#include "eon/electric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eon {
namespace {

constexpr double kEps = 1e-9;

struct Candidate {
  RequestId id;
  int priority;
  double freeable;
  bool arriving;
};

}  // namespace

double max_degraded_rate(const ServiceRequest& r, double now) {
  const double window = r.latest_finish() - now;
  if (window <= 0) return r.rate;
  const double remaining = r.remaining_at(now);
  const double needed = remaining / window;
  return std::min(r.rate, std::max(needed, r.min_rate()));
}

std::optional<AllocationPlan> ed_ba(const MultiLayerNet& net, const DegradedRoute& route,
                                    const ServiceRequest& r0, double now) {
  if (route.layer != Layer::kElectric) throw std::invalid_argument("ED-BA needs an electric route");
  if (route.links.empty()) throw std::invalid_argument("ED-BA needs a nonempty route");
  if (route.links.front().from != r0.src || route.links.back().to != r0.dst) {
    throw std::invalid_argument("route does not connect the request's endpoints");
  }

  ServiceRequest arriving = r0;
  arriving.rate = r0.bw;
  arriving.delivered = 0;
  arriving.rate_since = now;
  double r0_rate = r0.bw;
  const double r0_floor = max_degraded_rate(arriving, now);

  std::map<RequestId, double> new_rates;
  std::vector<RequestId> order;

  auto rate_of = [&](RequestId id) {
    auto it = new_rates.find(id);
    return it != new_rates.end() ? it->second : net.request(id).rate;
  };

  for (const auto& hop : route.links) {
    const auto& lp = net.lightpath(hop.id);
    double free = lp.capacity_gbps;
    for (const auto& [id, gbps] : lp.groomed) free -= rate_of(id);
    const double need = r0_rate;
    if (free + kEps >= need) continue;

    // Potential degraded list: the arrival itself plus carried requests of
    // no higher priority that still have slack.
    std::vector<Candidate> pdl;
    if (r0_rate > r0_floor + kEps) pdl.push_back({r0.id, r0.priority, r0_rate - r0_floor, true});
    for (const auto& [id, gbps] : lp.groomed) {
      if (new_rates.contains(id)) continue;  // already at its limit
      const auto& r = net.request(id);
      if (r.priority > r0.priority) continue;
      const double slack = r.rate - max_degraded_rate(r, now);
      if (slack > kEps) pdl.push_back({id, r.priority, slack, false});
    }

    double total = 0;
    for (const auto& c : pdl) total += c.freeable;
    if (free + total + kEps < need) return std::nullopt;

    std::sort(pdl.begin(), pdl.end(), [](const Candidate& a, const Candidate& b) {
      if (a.priority != b.priority) return a.priority < b.priority;
      if (a.arriving != b.arriving) return b.arriving;  // the arrival goes last in its class
      if (a.freeable != b.freeable) return a.freeable > b.freeable;
      return a.id < b.id;
    });
    double accumulated = 0;
    for (const auto& c : pdl) {
      if (c.arriving) {
        r0_rate = r0_floor;
      } else {
        new_rates[c.id] = max_degraded_rate(net.request(c.id), now);
        order.push_back(c.id);
      }
      accumulated += c.freeable;
      if (free + accumulated + kEps >= need) break;
    }
  }

  AllocationPlan plan;
  plan.route = route.link_ids();
  plan.admitted_rate = r0_rate;
  plan.admitted_finish = now + r0.volume() / r0_rate;
  for (auto id : order) {
    const auto& r = net.request(id);
    const double rate = new_rates.at(id);
    plan.degraded.push_back({id, r.rate, rate, now + r.remaining_at(now) / rate});
  }
  return plan;
}

void apply_allocation(MultiLayerNet& net, const ServiceRequest& r0, const AllocationPlan& plan,
                      double now) {
  for (const auto& change : plan.degraded) net.set_request_rate(change.id, change.new_rate, now);
  net.admit_request(r0, plan.route, plan.admitted_rate, now);
}

}  // namespace eon
