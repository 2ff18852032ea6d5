#include "eon/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace eon {

MetricsAccumulator::MetricsAccumulator(double window_h, int priorities)
    : window_(window_h),
      priorities_(priorities),
      offered_(static_cast<std::size_t>(priorities) + 1, 0.0),
      blocked_(static_cast<std::size_t>(priorities) + 1, 0.0) {
  if (!(window_h > 0)) throw std::invalid_argument("window length must be positive");
  if (priorities < 1) throw std::invalid_argument("need at least one priority class");
}

MetricsAccumulator::Window& MetricsAccumulator::window_at(double t) {
  const auto index = static_cast<std::size_t>(std::floor(t / window_));
  if (windows_.size() <= index) windows_.resize(index + 1);
  return windows_[index];
}

void MetricsAccumulator::record_arrival(const ServiceRequest& request, bool blocked) {
  if (request.priority < 1 || request.priority > priorities_) {
    throw std::invalid_argument("priority outside configured classes");
  }
  offered_[static_cast<std::size_t>(request.priority)] += request.bw;
  auto& w = window_at(request.arrival);
  w.offered += request.bw;
  if (blocked) {
    blocked_[static_cast<std::size_t>(request.priority)] += request.bw;
    w.blocked += request.bw;
  }
}

void MetricsAccumulator::advance(double t, double carried_gbps) {
  if (t < now_) throw std::invalid_argument("metrics time went backwards");
  while (now_ < t) {
    auto index = static_cast<std::size_t>(std::floor(now_ / window_));
    double boundary = static_cast<double>(index + 1) * window_;
    if (boundary <= now_) boundary = static_cast<double>(++index + 1) * window_;
    const double step_end = std::min(t, boundary);
    if (windows_.size() <= index) windows_.resize(index + 1);
    windows_[index].volume += carried_gbps * (step_end - now_);
    now_ = step_end;
  }
}

double MetricsAccumulator::offered(std::optional<int> priority) const {
  if (priority) return offered_.at(static_cast<std::size_t>(*priority));
  double sum = 0;
  for (auto v : offered_) sum += v;
  return sum;
}

double MetricsAccumulator::blocked(std::optional<int> priority) const {
  if (priority) return blocked_.at(static_cast<std::size_t>(*priority));
  double sum = 0;
  for (auto v : blocked_) sum += v;
  return sum;
}

double MetricsAccumulator::bbp(std::optional<int> priority) const {
  const double o = offered(priority);
  return o > 0 ? blocked(priority) / o : 0.0;
}

double MetricsAccumulator::carried_volume() const {
  double sum = 0;
  for (const auto& w : windows_) sum += w.volume;
  return sum;
}

std::vector<SeriesPoint> MetricsAccumulator::instantaneous_series() const {
  std::vector<SeriesPoint> out;
  out.reserve(windows_.size());
  for (std::size_t i = 0; i < windows_.size(); ++i) {
    const auto& w = windows_[i];
    out.push_back({static_cast<double>(i) * window_, w.volume / window_,
                   w.offered > 0 ? w.blocked / w.offered : 0.0});
  }
  return out;
}

}  // namespace eon
