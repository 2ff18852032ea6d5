#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eon/layer.hpp"

namespace eon {

// Upper-layer graph used to minimize potential degraded requests. Each
// edge weight is M * [a demand runs i->j] + [a direct link i->j has enough
// free capacity]; pairs with neither term have no edge.
class AuxGraph {
 public:
  AuxGraph(int node_count, std::int64_t big_m);

  int node_count() const { return node_count_; }
  std::int64_t big_m() const { return big_m_; }

  void set_edge(NodeId from, NodeId to, std::int64_t weight);
  std::optional<std::int64_t> weight(NodeId from, NodeId to) const;
  // No incident edge in either direction.
  bool isolated(NodeId node) const;
  std::size_t edge_count() const;

  bool operator==(const AuxGraph&) const = default;

 private:
  std::size_t at(NodeId from, NodeId to) const;

  int node_count_;
  std::int64_t big_m_;
  std::vector<std::int64_t> weights_;  // row-major, -1 = no edge
};

// N * B + 1: any path with fewer demand edges beats any path with more.
std::int64_t default_big_m(int node_count, int slots);

// `needed` <= 0 means any positive free capacity counts as a resource edge.
AuxGraph build_aux_graph(const LayerView& view, std::int64_t big_m, double needed = 0);
AuxGraph build_aux_graph(const MultiLayerNet& net, Layer layer, std::int64_t big_m,
                         double needed = 0);

// Endpoints of the demands whose routes pass through `endpoint` without
// terminating there. Requires `endpoint` to be isolated in `aux`.
std::vector<NodeId> replace_isolated_endpoint(const LayerView& view, const AuxGraph& aux,
                                              NodeId endpoint);

}  // namespace eon
