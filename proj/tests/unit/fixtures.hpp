#pragma once

#include <vector>

#include "eon/network.hpp"

namespace fixture {

// 0 -> 1 -> ... -> n-1 (and back), every fiber `km` long.
inline eon::MultiLayerNet line(int n, int slots, double km = 100) {
  eon::MultiLayerNet net(n, slots);
  for (int i = 0; i + 1 < n; ++i) {
    net.add_fiber(i, i + 1, km);
    net.add_fiber(i + 1, i, km);
  }
  return net;
}

// Forward fibers 0->1->...->n-1 of a line() network.
inline std::vector<eon::FiberId> forward(const eon::MultiLayerNet& net, int from, int to) {
  std::vector<eon::FiberId> out;
  for (int i = from; i < to; ++i) out.push_back(*net.find_fiber(i, i + 1));
  return out;
}

inline eon::ServiceRequest request(eon::RequestId id, eon::NodeId s, eon::NodeId d, double bw,
                                   double arrival = 0, double holding = 1, double tolerance = 0.5,
                                   int priority = 1) {
  eon::ServiceRequest r;
  r.id = id;
  r.src = s;
  r.dst = d;
  r.bw = bw;
  r.arrival = arrival;
  r.holding = holding;
  r.tolerance = tolerance;
  r.deadline = holding * (1 / tolerance - 1);
  r.priority = priority;
  return r;
}

}  // namespace fixture
