#include "eon/traffic.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace eon {

void WorkloadConfig::validate() const {
  if (!(lambda_per_node > 0) || !(mu > 0)) throw std::invalid_argument("lambda and mu must be positive");
  if (!(bw_min > 0) || bw_max < bw_min) throw std::invalid_argument("invalid bandwidth range");
  if (bw_step < 0) throw std::invalid_argument("bandwidth step must be non-negative");
  if (!(tolerance_min > 0) || tolerance_max > 1 || tolerance_max < tolerance_min) {
    throw std::invalid_argument("tolerance range must lie in (0, 1]");
  }
  if (priorities < 1) throw std::invalid_argument("need at least one priority class");
  if (duration_h < 0) throw std::invalid_argument("duration must be non-negative");
}

TrafficGenerator::TrafficGenerator(WorkloadConfig config, int node_count)
    : config_(config), node_count_(node_count), rng_(config.seed) {
  config_.validate();
  if (node_count < 2) throw std::invalid_argument("traffic needs at least two nodes");
}

double TrafficGenerator::uniform01() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

bool TrafficGenerator::next(ServiceRequest& out) {
  const double aggregate = config_.lambda_per_node * node_count_;
  clock_ += -std::log1p(-uniform01()) / aggregate;
  if (clock_ > config_.duration_h) return false;

  ServiceRequest r;
  r.id = next_id_++;
  r.arrival = clock_;
  const auto pairs = static_cast<std::uint64_t>(node_count_) * (node_count_ - 1);
  const auto pick = static_cast<std::uint64_t>(uniform01() * static_cast<double>(pairs));
  r.src = static_cast<NodeId>(pick / (node_count_ - 1));
  const auto rest = static_cast<NodeId>(pick % (node_count_ - 1));
  r.dst = rest >= r.src ? rest + 1 : rest;

  const double u_bw = uniform01();
  if (config_.bw_step > 0) {
    const auto steps = static_cast<int>(std::floor((config_.bw_max - config_.bw_min) / config_.bw_step + 1e-9));
    r.bw = config_.bw_min + config_.bw_step * std::floor(u_bw * (steps + 1));
  } else {
    r.bw = config_.bw_min + (config_.bw_max - config_.bw_min) * u_bw;
  }
  r.holding = -std::log1p(-uniform01()) / config_.mu;
  r.tolerance = config_.tolerance_min + (config_.tolerance_max - config_.tolerance_min) * uniform01();
  r.priority = 1 + static_cast<int>(uniform01() * config_.priorities);
  // A request held at its tolerance floor finishes exactly at the deadline.
  r.deadline = r.holding * (1.0 / r.tolerance - 1.0);
  r.rate = r.bw;
  r.rate_since = r.arrival;
  out = std::move(r);
  return true;
}

std::vector<ServiceRequest> generate(const WorkloadConfig& config, int node_count) {
  TrafficGenerator gen(config, node_count);
  std::vector<ServiceRequest> out;
  ServiceRequest r;
  while (gen.next(r)) out.push_back(r);
  return out;
}

void write_trace_csv(std::ostream& out, std::span<const ServiceRequest> requests) {
  out << "arrival_time,s,d,bw_gbps,holding_h,deadline_h,priority,tolerance\n";
  char buf[256];
  for (const auto& r : requests) {
    std::snprintf(buf, sizeof buf, "%.17g,%d,%d,%.17g,%.17g,%.17g,%d,%.17g\n", r.arrival, r.src,
                  r.dst, r.bw, r.holding, r.deadline, r.priority, r.tolerance);
    out << buf;
  }
}

std::vector<ServiceRequest> read_trace_csv(std::istream& in) {
  std::vector<ServiceRequest> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("arrival_time", 0) == 0) continue;
    ServiceRequest r;
    char c[7];
    std::istringstream fields(line);
    if (!(fields >> r.arrival >> c[0] >> r.src >> c[1] >> r.dst >> c[2] >> r.bw >> c[3] >>
          r.holding >> c[4] >> r.deadline >> c[5] >> r.priority >> c[6] >> r.tolerance)) {
      throw std::runtime_error("trace line " + std::to_string(line_no) + ": malformed");
    }
    r.id = static_cast<RequestId>(out.size()) + 1;
    r.rate = r.bw;
    r.rate_since = r.arrival;
    out.push_back(r);
  }
  return out;
}

}  // namespace eon
