#pragma once

#include <optional>
#include <vector>

#include "eon/network.hpp"
#include "eon/routing.hpp"

namespace eon {

// Lowest rate `r` can drop to at `now` and still deliver its remaining
// volume by arrival + holding + deadline, never below its tolerance floor
// and never above its current rate.
double max_degraded_rate(const ServiceRequest& r, double now);

struct RateChange {
  RequestId id = 0;
  double old_rate = 0;
  double new_rate = 0;
  double new_finish = 0;
};

// Outcome of degraded bandwidth allocation for an arriving request.
struct AllocationPlan {
  std::vector<LightpathId> route;
  double admitted_rate = 0;    // rate granted to the arriving request
  double admitted_finish = 0;  // its projected finish time
  std::vector<RateChange> degraded;  // existing requests slowed down, in order

  bool arrival_degraded(const ServiceRequest& r0) const { return admitted_rate < r0.bw; }
};

// Degraded bandwidth allocation over an electric route. On every link
// short of r0.bw, the arriving request and carried requests of no higher
// priority are slowed to their limits in ascending priority order until
// the link fits. Returns nullopt (blocked) if any link cannot be freed; the
// network is never touched.
std::optional<AllocationPlan> ed_ba(const MultiLayerNet& net, const DegradedRoute& route,
                                    const ServiceRequest& r0, double now);

// Applies rate changes, then admits r0 on the plan's route.
void apply_allocation(MultiLayerNet& net, const ServiceRequest& r0, const AllocationPlan& plan,
                      double now);

}  // namespace eon
