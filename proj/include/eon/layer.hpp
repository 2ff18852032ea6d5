#pragma once

#include <unordered_map>
#include <vector>

#include "eon/network.hpp"
#include "eon/types.hpp"

namespace eon {

// A link of any layer: the k-th link from `from` to `to`, the ids of the
// demands routed over it, and its free capacity (Gbps in the electric
// layer, free slots in the optical layer).
struct LayerLink {
  LinkId id = 0;
  NodeId from = 0;
  NodeId to = 0;
  int k = 0;
  std::vector<std::int64_t> carried;  // sorted
  double free_capacity = 0;
};

// A demand routed over a layer: a service request over lightpaths, or a
// lightpath over fibers.
struct LayerDemand {
  std::int64_t id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  std::vector<LinkId> route;
};

// Read-only routing substrate for one layer. Routing works on this instead
// of MultiLayerNet so the same code serves both layers and hand-built
// test instances.
class LayerView {
 public:
  LayerView(Layer layer, int node_count, int slots = 0);

  // `k` and the sort order of `carried` are filled in by add_link.
  void add_link(LayerLink link);
  void add_demand(LayerDemand demand);

  Layer layer() const { return layer_; }
  int node_count() const { return node_count_; }
  // Spectrum slots per fiber, 0 when not meaningful.
  int slots() const { return slots_; }

  const std::vector<LayerLink>& links() const { return links_; }
  const std::vector<LayerDemand>& demands() const { return demands_; }
  const LayerLink& link(LinkId id) const;
  bool has_link(LinkId id) const { return index_.contains(id); }
  // Indices into links(), ordered by (to, id).
  const std::vector<std::size_t>& out_links(NodeId node) const;

 private:
  Layer layer_;
  int node_count_;
  int slots_;
  std::vector<LayerLink> links_;
  std::vector<LayerDemand> demands_;
  std::unordered_map<LinkId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
};

// Electric layer: lightpaths as links, service requests as demands.
LayerView electric_view(const MultiLayerNet& net);
// Optical layer: fibers as links, lightpaths as demands.
LayerView optical_view(const MultiLayerNet& net);
LayerView make_view(const MultiLayerNet& net, Layer layer);

}  // namespace eon
