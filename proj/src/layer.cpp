#include "eon/layer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eon {

LayerView::LayerView(Layer layer, int node_count, int slots)
    : layer_(layer), node_count_(node_count), slots_(slots),
      out_(static_cast<std::size_t>(node_count)) {}

void LayerView::add_link(LayerLink link) {
  if (link.from < 0 || link.to < 0 || link.from >= node_count_ || link.to >= node_count_) {
    throw std::invalid_argument("layer link endpoint out of range");
  }
  if (index_.contains(link.id)) {
    throw std::invalid_argument("duplicate layer link id " + std::to_string(link.id));
  }
  std::sort(link.carried.begin(), link.carried.end());
  link.k = 0;
  auto& out = out_[static_cast<std::size_t>(link.from)];
  for (auto i : out) {
    if (links_[i].to == link.to) ++link.k;
  }
  const std::size_t idx = links_.size();
  index_[link.id] = idx;
  links_.push_back(std::move(link));
  auto pos = std::lower_bound(out.begin(), out.end(), idx, [this](std::size_t a, std::size_t b) {
    const auto& la = links_[a];
    const auto& lb = links_[b];
    return la.to != lb.to ? la.to < lb.to : la.id < lb.id;
  });
  out.insert(pos, idx);
}

void LayerView::add_demand(LayerDemand demand) { demands_.push_back(std::move(demand)); }

const LayerLink& LayerView::link(LinkId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown layer link " + std::to_string(id));
  return links_[it->second];
}

const std::vector<std::size_t>& LayerView::out_links(NodeId node) const {
  return out_.at(static_cast<std::size_t>(node));
}

LayerView electric_view(const MultiLayerNet& net) {
  LayerView view(Layer::kElectric, net.node_count(), net.slots());
  for (const auto& [id, lp] : net.lightpaths()) {
    LayerLink link{id, lp.src, lp.dst, 0, {}, lp.free_gbps()};
    link.carried.reserve(lp.groomed.size());
    for (const auto& [rid, gbps] : lp.groomed) link.carried.push_back(rid);
    view.add_link(std::move(link));
  }
  for (const auto& [id, r] : net.requests()) view.add_demand({id, r.src, r.dst, r.route});
  return view;
}

LayerView optical_view(const MultiLayerNet& net) {
  LayerView view(Layer::kOptical, net.node_count(), net.slots());
  for (const auto& f : net.fibers()) {
    const auto& on = net.lightpaths_on(f.id);
    view.add_link({f.id, f.from, f.to, 0, {on.begin(), on.end()},
                   static_cast<double>(f.spectrum.free_count())});
  }
  for (const auto& [id, lp] : net.lightpaths()) view.add_demand({id, lp.src, lp.dst, lp.fibers});
  return view;
}

LayerView make_view(const MultiLayerNet& net, Layer layer) {
  return layer == Layer::kElectric ? electric_view(net) : optical_view(net);
}

}  // namespace eon
