#include "eon/routing.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "eon/aux_graph.hpp"

namespace eon {
namespace {

using Labels = std::vector<std::int64_t>;

void check_endpoints(const LayerView& view, NodeId s, NodeId d) {
  if (s < 0 || d < 0 || s >= view.node_count() || d >= view.node_count()) {
    throw std::invalid_argument("route endpoint out of range");
  }
  if (s == d) throw std::invalid_argument("route source equals destination");
}

Labels merge(const Labels& a, const Labels& b) {
  Labels out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

constexpr int kUnreached = std::numeric_limits<int>::max();

std::vector<int> hop_distances(const LayerView& view, NodeId from, bool reverse) {
  std::vector<std::vector<NodeId>> in;
  if (reverse) {
    in.resize(static_cast<std::size_t>(view.node_count()));
    for (const auto& l : view.links()) in[l.to].push_back(l.from);
  }
  std::vector<int> dist(static_cast<std::size_t>(view.node_count()), kUnreached);
  std::deque<NodeId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    auto visit = [&](NodeId v) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    };
    if (reverse) {
      for (auto v : in[u]) visit(v);
    } else {
      for (auto idx : view.out_links(u)) visit(view.links()[idx].to);
    }
  }
  return dist;
}

struct Bound {
  int pdr = INT_MAX;
  int rh = INT_MAX;
  bool admits(std::size_t pdr_value, int hops) const {
    const auto p = static_cast<long long>(pdr_value);
    return p < pdr || (p == pdr && hops < rh);
  }
};

struct SearchOutcome {
  std::optional<std::vector<LinkId>> path;
  bool complete = true;
};

// Best-first search over (node, carried-set) labels ordered by
// (|set|, hops, insertion). A label is dropped when a settled label at the
// same node carries a subset with no more hops; any completion of the
// dropped label is at least matched by the same completion of the settled
// one, so the first label settled at `d` is optimal. Only paths strictly
// better than `bound` are returned.
SearchOutcome label_search(const LayerView& view, NodeId s, NodeId d,
                           const std::function<bool(const LayerLink&)>& allowed, Bound bound,
                           std::size_t max_expansions) {
  struct Label {
    NodeId node;
    Labels set;
    int hops;
    int parent;
    std::size_t via;
  };
  std::vector<Label> pool;
  using Key = std::tuple<std::size_t, int, std::size_t>;  // |set|, hops, label index
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
  std::vector<std::vector<int>> settled(static_cast<std::size_t>(view.node_count()));

  auto dominated = [&](NodeId node, const Labels& set, int hops) {
    for (int idx : settled[node]) {
      const auto& other = pool[static_cast<std::size_t>(idx)];
      if (other.hops <= hops && other.set.size() <= set.size() &&
          std::includes(set.begin(), set.end(), other.set.begin(), other.set.end())) {
        return true;
      }
    }
    return false;
  };

  pool.push_back({s, {}, 0, -1, 0});
  open.emplace(0, 0, 0);
  std::size_t expansions = 0;
  while (!open.empty()) {
    const auto [size, hops, index] = open.top();
    open.pop();
    const Label& cur = pool[index];
    if (!bound.admits(cur.set.size(), cur.hops)) continue;
    if (dominated(cur.node, cur.set, cur.hops)) continue;
    if (cur.node == d) {
      std::vector<LinkId> path;
      for (int at = static_cast<int>(index); pool[static_cast<std::size_t>(at)].parent >= 0;
           at = pool[static_cast<std::size_t>(at)].parent) {
        path.push_back(view.links()[pool[static_cast<std::size_t>(at)].via].id);
      }
      std::reverse(path.begin(), path.end());
      return {std::move(path), true};
    }
    if (++expansions > max_expansions) return {std::nullopt, false};
    settled[cur.node].push_back(static_cast<int>(index));

    const NodeId node = cur.node;
    for (auto li : view.out_links(node)) {
      const auto& link = view.links()[li];
      if (!allowed(link)) continue;
      const Label& parent = pool[index];
      Labels next = merge(parent.set, link.carried);
      const int next_hops = parent.hops + 1;
      if (!bound.admits(next.size(), next_hops)) continue;
      if (dominated(link.to, next, next_hops)) continue;
      const std::size_t next_size = next.size();
      pool.push_back({link.to, std::move(next), next_hops, static_cast<int>(index), li});
      open.emplace(next_size, next_hops, pool.size() - 1);
    }
  }
  return {std::nullopt, true};
}

bool better(const DegradedRoute& a, const DegradedRoute& b) {
  return std::tie(a.pdr, a.rh) < std::tie(b.pdr, b.rh);
}

// Dijkstra over the dense aux graph; ties keep the first (lowest-id) parent.
std::optional<std::vector<NodeId>> aux_shortest_path(const AuxGraph& aux, NodeId s, NodeId d) {
  const int n = aux.node_count();
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n), kInf);
  std::vector<NodeId> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  dist[s] = 0;
  for (int round = 0; round < n; ++round) {
    NodeId u = -1;
    for (NodeId v = 0; v < n; ++v) {
      if (!done[v] && dist[v] != kInf && (u < 0 || dist[v] < dist[u])) u = v;
    }
    if (u < 0 || u == d) break;
    done[u] = 1;
    for (NodeId v = 0; v < n; ++v) {
      auto w = aux.weight(u, v);
      if (!w || done[v]) continue;
      if (dist[u] + *w < dist[v]) {
        dist[v] = dist[u] + *w;
        parent[v] = u;
      }
    }
  }
  if (dist[d] == kInf) return std::nullopt;
  std::vector<NodeId> path{d};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::string_view to_string(RoutingPolicy policy) {
  return policy == RoutingPolicy::kMinRH ? "MinRH" : "MinPDR";
}

std::vector<NodeId> DegradedRoute::nodes() const {
  std::vector<NodeId> out;
  if (links.empty()) return out;
  out.push_back(links.front().from);
  for (const auto& l : links) out.push_back(l.to);
  return out;
}

std::vector<LinkId> DegradedRoute::link_ids() const {
  std::vector<LinkId> out;
  out.reserve(links.size());
  for (const auto& l : links) out.push_back(l.id);
  return out;
}

int count_rh(const DegradedRoute& route) { return static_cast<int>(route.links.size()); }

int count_pdr(std::span<const LayerLink> links) {
  Labels all;
  for (const auto& link : links) {
    Labels carried = link.carried;
    std::sort(carried.begin(), carried.end());
    if (std::adjacent_find(carried.begin(), carried.end()) != carried.end()) {
      throw std::invalid_argument("link " + std::to_string(link.id) +
                                  " lists a carried request twice");
    }
    all = merge(all, carried);
  }
  return static_cast<int>(all.size());
}

DegradedRoute make_route(const LayerView& view, std::span<const LinkId> link_ids) {
  DegradedRoute route;
  route.layer = view.layer();
  std::vector<NodeId> seen;
  for (auto id : link_ids) {
    const auto& link = view.link(id);
    if (seen.empty()) {
      seen.push_back(link.from);
    } else if (seen.back() != link.from) {
      throw std::invalid_argument("route links are not connected");
    }
    if (std::find(seen.begin(), seen.end(), link.to) != seen.end()) {
      throw std::invalid_argument("route revisits node " + std::to_string(link.to));
    }
    seen.push_back(link.to);
    route.links.push_back(link);
  }
  route.rh = count_rh(route);
  route.pdr = count_pdr(route.links);
  return route;
}

std::vector<LinkId> cancel_loops(const LayerView& view, std::span<const LinkId> walk) {
  std::vector<LinkId> out;
  if (walk.empty()) return out;
  std::vector<NodeId> nodes{view.link(walk.front()).from};
  for (auto id : walk) {
    const auto& link = view.link(id);
    if (link.from != nodes.back()) throw std::invalid_argument("walk is not connected");
    auto it = std::find(nodes.begin(), nodes.end(), link.to);
    if (it != nodes.end()) {
      const auto keep = static_cast<std::size_t>(it - nodes.begin());
      nodes.resize(keep + 1);
      out.resize(keep);
    } else {
      nodes.push_back(link.to);
      out.push_back(id);
    }
  }
  return out;
}

std::optional<DegradedRoute> min_rh_route(const LayerView& view, NodeId s, NodeId d,
                                          double /*needed*/, const SearchLimits& limits) {
  check_endpoints(view, s, d);
  const auto from_s = hop_distances(view, s, false);
  if (from_s[d] == kUnreached) return std::nullopt;
  const auto to_d = hop_distances(view, d, true);
  const int hops = from_s[d];
  auto on_shortest = [&](const LayerLink& l) {
    return from_s[l.from] != kUnreached && to_d[l.to] != kUnreached &&
           from_s[l.from] + 1 + to_d[l.to] == hops;
  };
  auto found = label_search(view, s, d, on_shortest, {}, limits.max_expansions);
  if (found.path) return make_route(view, *found.path);

  // Budget exhausted: walk the shortest-path DAG taking the first link.
  std::vector<LinkId> path;
  for (NodeId at = s; at != d;) {
    for (auto li : view.out_links(at)) {
      const auto& l = view.links()[li];
      if (on_shortest(l)) {
        path.push_back(l.id);
        at = l.to;
        break;
      }
    }
  }
  auto route = make_route(view, path);
  route.proven_optimal = false;
  return route;
}

std::optional<DegradedRoute> aux_graph_route(const LayerView& view, NodeId s, NodeId d,
                                             double needed, std::int64_t big_m,
                                             const SearchLimits& limits) {
  check_endpoints(view, s, d);
  if (big_m <= 0) big_m = default_big_m(view.node_count(), view.slots());
  const auto aux = build_aux_graph(view, big_m, needed);
  auto candidates = [&](NodeId endpoint) {
    return aux.isolated(endpoint) ? replace_isolated_endpoint(view, aux, endpoint)
                                  : std::vector<NodeId>{endpoint};
  };
  const auto sources = candidates(s);
  const auto targets = candidates(d);

  std::optional<DegradedRoute> best;
  for (auto s2 : sources) {
    for (auto d2 : targets) {
      std::vector<NodeId> upper;
      if (s2 == d2) {
        upper = {s, d};
      } else {
        auto path = aux_shortest_path(aux, s2, d2);
        if (!path) continue;
        upper = std::move(*path);
        // Substituted endpoints stand in for the isolated originals.
        upper.front() = s;
        upper.back() = d;
      }
      std::vector<LinkId> walk;
      bool expanded = true;
      for (std::size_t i = 0; i + 1 < upper.size() && expanded; ++i) {
        if (upper[i] == upper[i + 1]) continue;
        auto segment = min_rh_route(view, upper[i], upper[i + 1], needed, limits);
        if (!segment) {
          expanded = false;
          break;
        }
        for (const auto& l : segment->links) walk.push_back(l.id);
      }
      if (!expanded || walk.empty()) continue;
      auto route = make_route(view, cancel_loops(view, walk));
      if (!best || better(route, *best)) best = std::move(route);
    }
  }
  return best;
}

std::optional<DegradedRoute> min_pdr_route(const LayerView& view, NodeId s, NodeId d,
                                           double needed, const SearchLimits& limits) {
  auto incumbent = min_rh_route(view, s, d, needed, limits);
  if (!incumbent) return std::nullopt;
  const int fewest_hops = incumbent->rh;
  if (auto heuristic = aux_graph_route(view, s, d, needed, 0, limits);
      heuristic && better(*heuristic, *incumbent)) {
    incumbent = std::move(heuristic);
  }
  // Nothing can beat zero PDR at the minimum hop count.
  if (incumbent->pdr == 0 && incumbent->rh == fewest_hops) return incumbent;

  const Bound bound{incumbent->pdr, incumbent->rh};
  auto found = label_search(
      view, s, d, [](const LayerLink&) { return true; }, bound, limits.max_expansions);
  if (found.path) return make_route(view, *found.path);
  incumbent->proven_optimal = incumbent->proven_optimal && found.complete;
  return incumbent;
}

std::optional<DegradedRoute> degraded_route(const LayerView& view, RoutingPolicy policy,
                                            NodeId s, NodeId d, double needed,
                                            const SearchLimits& limits) {
  return policy == RoutingPolicy::kMinRH ? min_rh_route(view, s, d, needed, limits)
                                         : min_pdr_route(view, s, d, needed, limits);
}

}  // namespace eon
