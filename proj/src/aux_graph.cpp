#include "eon/aux_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace eon {

AuxGraph::AuxGraph(int node_count, std::int64_t big_m)
    : node_count_(node_count),
      big_m_(big_m),
      weights_(static_cast<std::size_t>(node_count) * static_cast<std::size_t>(node_count), -1) {
  if (big_m <= node_count) {
    throw std::invalid_argument("aux graph weight M must exceed the node count");
  }
}

std::size_t AuxGraph::at(NodeId from, NodeId to) const {
  if (from < 0 || to < 0 || from >= node_count_ || to >= node_count_) {
    throw std::out_of_range("aux graph node out of range");
  }
  return static_cast<std::size_t>(from) * static_cast<std::size_t>(node_count_) +
         static_cast<std::size_t>(to);
}

void AuxGraph::set_edge(NodeId from, NodeId to, std::int64_t weight) {
  if (weight <= 0) throw std::invalid_argument("aux edge weight must be positive");
  weights_[at(from, to)] = weight;
}

std::optional<std::int64_t> AuxGraph::weight(NodeId from, NodeId to) const {
  const auto w = weights_[at(from, to)];
  if (w < 0) return std::nullopt;
  return w;
}

bool AuxGraph::isolated(NodeId node) const {
  for (NodeId other = 0; other < node_count_; ++other) {
    if (weights_[at(node, other)] >= 0 || weights_[at(other, node)] >= 0) return false;
  }
  return true;
}

std::size_t AuxGraph::edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(), [](auto w) { return w >= 0; }));
}

std::int64_t default_big_m(int node_count, int slots) {
  return static_cast<std::int64_t>(node_count) * std::max(slots, 1) + 1;
}

AuxGraph build_aux_graph(const LayerView& view, std::int64_t big_m, double needed) {
  const int n = view.node_count();
  std::vector<char> demand_edge(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> resource_edge(static_cast<std::size_t>(n) * n, 0);
  for (const auto& d : view.demands()) {
    if (d.src != d.dst) demand_edge[static_cast<std::size_t>(d.src) * n + d.dst] = 1;
  }
  for (const auto& l : view.links()) {
    const bool enough = needed > 0 ? l.free_capacity >= needed : l.free_capacity > 0;
    if (enough) resource_edge[static_cast<std::size_t>(l.from) * n + l.to] = 1;
  }
  AuxGraph aux(n, big_m);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      const auto cell = static_cast<std::size_t>(i) * n + j;
      const std::int64_t w = big_m * demand_edge[cell] + resource_edge[cell];
      if (w > 0) aux.set_edge(i, j, w);
    }
  }
  return aux;
}

AuxGraph build_aux_graph(const MultiLayerNet& net, Layer layer, std::int64_t big_m,
                         double needed) {
  return build_aux_graph(make_view(net, layer), big_m, needed);
}

std::vector<NodeId> replace_isolated_endpoint(const LayerView& view, const AuxGraph& aux,
                                              NodeId endpoint) {
  if (!aux.isolated(endpoint)) {
    throw std::logic_error("node " + std::to_string(endpoint) +
                           " is not isolated in the upper layer");
  }
  std::set<NodeId> substitutes;
  for (const auto& d : view.demands()) {
    for (std::size_t i = 0; i + 1 < d.route.size(); ++i) {
      if (view.link(d.route[i]).to == endpoint) {
        substitutes.insert(d.src);
        substitutes.insert(d.dst);
        break;
      }
    }
  }
  return {substitutes.begin(), substitutes.end()};
}

}  // namespace eon
