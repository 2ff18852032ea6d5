#pragma once

#include <optional>
#include <vector>

#include "eon/network.hpp"

namespace eon {

struct SeriesPoint {
  double time_h = 0;  // window start
  double throughput_gbps = 0;
  double bbp = 0;
};

// Bandwidth blocking and carried-throughput bookkeeping for one run.
class MetricsAccumulator {
 public:
  explicit MetricsAccumulator(double window_h = 0.05, int priorities = 5);

  void record_arrival(const ServiceRequest& request, bool blocked);
  // Integrates `carried_gbps` from the last advance up to `t`.
  void advance(double t, double carried_gbps);

  double offered(std::optional<int> priority = std::nullopt) const;
  double blocked(std::optional<int> priority = std::nullopt) const;
  // Blocked over offered bandwidth; 0 when nothing was offered.
  double bbp(std::optional<int> priority = std::nullopt) const;

  int priorities() const { return priorities_; }
  double window() const { return window_; }
  double now() const { return now_; }
  double carried_volume() const;  // Gbps*h integrated so far

  std::vector<SeriesPoint> instantaneous_series() const;

 private:
  struct Window {
    double volume = 0;
    double offered = 0;
    double blocked = 0;
  };
  Window& window_at(double t);

  double window_;
  int priorities_;
  double now_ = 0;
  std::vector<double> offered_;  // index 0 unused
  std::vector<double> blocked_;
  std::vector<Window> windows_;
};

}  // namespace eon
