#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eon/network.hpp"
#include "eon/routing.hpp"

namespace eon {

// Slots free on every fiber of `route`, ascending.
std::vector<int> compute_assi(const MultiLayerNet& net, std::span<const FiberId> route);

// Slot borders w in [1, B+1] (border w sits between slots w-1 and w) that no
// lightpath on any fiber of `route` straddles, ascending.
std::vector<int> compute_sbtl(const MultiLayerNet& net, std::span<const FiberId> route);

// Slots needed after moving from `from_level` to `to_level` with the same
// capacity: ceil(slots * log2(from) / log2(to)).
int degraded_slot_count(const ModulationTable& table, int slots, int from_level, int to_level);

// Which edge of the span stays put when a lightpath shrinks.
enum class Anchor { kLeft, kRight };

// Raises a lightpath's modulation level and shrinks its span. Throws
// std::invalid_argument when the level is not higher, the distance exceeds
// the new reach, or groomed traffic would no longer fit.
const Lightpath& degrade_lightpath(MultiLayerNet& net, LightpathId id, int new_level,
                                   Anchor anchor = Anchor::kLeft);

struct LightpathRequest {
  NodeId i = 0;
  NodeId j = 0;
  int theta = 1;  // demanded slots
  int level = 0;  // modulation of the new lightpath; 0 = table default
};

struct LightpathDegradation {
  LightpathId id = 0;
  int old_level = 0;
  int new_level = 0;
  int first_slot = 0;  // span after degradation
  int last_slot = 0;
  Anchor anchor = Anchor::kLeft;
};

struct EstablishmentPlan {
  std::vector<FiberId> route;
  int first_slot = 0;
  int slot_count = 0;
  int level = 0;
  std::vector<LightpathDegradation> degradations;
  bool double_side = false;
};

// Lowest starting slot of `slot_count` contiguous slots free along `route`.
std::optional<int> first_fit(const MultiLayerNet& net, std::span<const FiberId> route,
                             int slot_count);

// Optical degraded modulation and spectrum allocation. If no free run fits
// l0, the widest free run (or, when the route has no common free slot, the
// first unstraddled border) is grown by degrading the nearest lightpaths on
// its left and, if that is not enough, on its right as well.
std::optional<EstablishmentPlan> od_msa(const MultiLayerNet& net, std::span<const FiberId> route,
                                        const LightpathRequest& l0, double length_km);

// Applies the plan's degradations and sets up the new lightpath.
LightpathId apply_establishment(MultiLayerNet& net, const EstablishmentPlan& plan);

enum class NewLightpathModulation { kDefaultLevel, kDistanceBest };

struct ProvisionOptions {
  double threshold_gbps = 150;
  NewLightpathModulation modulation = NewLightpathModulation::kDefaultLevel;
  RoutingPolicy fiber_routing = RoutingPolicy::kMinRH;
  bool optical_degradation = false;
  SearchLimits limits;
};

enum class ProvisionKind { kGroomed, kNewLightpath, kDegradedLightpath };

struct ProvisionOutcome {
  ProvisionKind kind = ProvisionKind::kGroomed;
  std::vector<LightpathId> route;  // electric route for the request
  std::vector<LightpathDegradation> degradations;
  std::optional<DegradedRoute> fiber_route;  // set when a lightpath was created
};

// Fewest-hop chain of existing lightpaths with at least `gbps` spare.
std::optional<std::vector<LightpathId>> groom_route(const MultiLayerNet& net, NodeId s, NodeId d,
                                                    double gbps);

// New lightpath s->d sized for max(bw, threshold), placed First-Fit.
std::optional<ProvisionOutcome> establish_lightpath(MultiLayerNet& net,
                                                    const ServiceRequest& request,
                                                    const ProvisionOptions& options);

// New lightpath s->d made room for by optical degradation.
std::optional<ProvisionOutcome> establish_with_degradation(MultiLayerNet& net,
                                                           const ServiceRequest& request,
                                                           const ProvisionOptions& options);

// Threshold-based grooming: groom, else a new lightpath, else (if enabled)
// a lightpath made room for by optical degradation. Does not admit the
// request; the caller reserves capacity along the returned route.
std::optional<ProvisionOutcome> provision_lightpath_layer(MultiLayerNet& net,
                                                          const ServiceRequest& request,
                                                          const ProvisionOptions& options);

}  // namespace eon
