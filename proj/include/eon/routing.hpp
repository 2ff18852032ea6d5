#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eon/layer.hpp"

namespace eon {

enum class RoutingPolicy { kMinRH, kMinPDR };

std::string_view to_string(RoutingPolicy policy);

// Caps the exact label search. Hitting the cap falls back to the best
// candidate found so far and clears DegradedRoute::proven_optimal.
struct SearchLimits {
  std::size_t max_expansions = 20000;
};

struct DegradedRoute {
  Layer layer = Layer::kElectric;
  std::vector<LayerLink> links;  // ordered s -> d
  int rh = 0;                    // route hops
  int pdr = 0;                   // distinct demands carried by the links
  bool proven_optimal = true;

  std::vector<NodeId> nodes() const;
  std::vector<LinkId> link_ids() const;
};

int count_rh(const DegradedRoute& route);
// Size of the union of carried sets; throws if a carried set repeats an id.
int count_pdr(std::span<const LayerLink> links);

// Builds a route from link ids, rejecting disconnected or looping paths.
DegradedRoute make_route(const LayerView& view, std::span<const LinkId> link_ids);

// Removes cycles from a connected walk, keeping the first visit of each node.
std::vector<LinkId> cancel_loops(const LayerView& view, std::span<const LinkId> walk);

// Fewest hops; among those, fewest potential degraded requests.
std::optional<DegradedRoute> min_rh_route(const LayerView& view, NodeId s, NodeId d,
                                          double needed = 0, const SearchLimits& limits = {});

// The aux-graph construction on its own: shortest path on the upper layer
// (after substituting isolated endpoints), expanded segment by segment into
// fewest-hop lower-layer paths, loops cancelled. A heuristic; min_pdr_route
// uses it as the starting incumbent.
std::optional<DegradedRoute> aux_graph_route(const LayerView& view, NodeId s, NodeId d,
                                             double needed = 0, std::int64_t big_m = 0,
                                             const SearchLimits& limits = {});

// Fewest potential degraded requests; among those, fewest hops.
std::optional<DegradedRoute> min_pdr_route(const LayerView& view, NodeId s, NodeId d,
                                           double needed = 0, const SearchLimits& limits = {});

std::optional<DegradedRoute> degraded_route(const LayerView& view, RoutingPolicy policy,
                                            NodeId s, NodeId d, double needed = 0,
                                            const SearchLimits& limits = {});

}  // namespace eon
