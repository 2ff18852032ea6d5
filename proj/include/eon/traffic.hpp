#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "eon/network.hpp"

namespace eon {

// Raw engine behind every variate. std::mt19937_64's output sequence is
// fixed by the standard; variates are derived from it by hand so streams
// do not depend on the standard library's distributions.
inline constexpr std::string_view kRngName = "mt19937_64";

struct WorkloadConfig {
  double lambda_per_node = 300;  // arrivals per node per hour
  double mu = 10;                // 1 / mean holding time, per hour
  double bw_min = 5;
  double bw_max = 150;
  double bw_step = 0;  // > 0 draws bw from {bw_min, bw_min + step, ..., bw_max}
  double tolerance_min = 0.25;
  double tolerance_max = 1.0;
  int priorities = 5;
  double duration_h = 1.5;
  std::uint64_t seed = 1;

  double erlang_per_node() const { return lambda_per_node / mu; }
  void validate() const;
};

// Poisson arrivals over all ordered node pairs, in arrival order.
class TrafficGenerator {
 public:
  TrafficGenerator(WorkloadConfig config, int node_count);

  // Next request, or false once the arrival time passes the duration.
  bool next(ServiceRequest& out);

 private:
  double uniform01();  // [0, 1)

  WorkloadConfig config_;
  int node_count_;
  std::mt19937_64 rng_;
  double clock_ = 0;
  RequestId next_id_ = 1;
};

std::vector<ServiceRequest> generate(const WorkloadConfig& config, int node_count);

// CSV columns: arrival_time,s,d,bw_gbps,holding_h,deadline_h,priority,tolerance
void write_trace_csv(std::ostream& out, std::span<const ServiceRequest> requests);
std::vector<ServiceRequest> read_trace_csv(std::istream& in);

}  // namespace eon
