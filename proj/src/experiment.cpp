#include "eon/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace eon {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a seed: '" + std::string(s) + "'");
  return v;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  if (loads.empty()) throw std::invalid_argument("no loads given");
  for (double l : loads)
    if (!(l > 0)) throw std::invalid_argument("loads must be positive");
  if (policies.empty()) throw std::invalid_argument("no policies given");
  if (seeds.empty()) throw std::invalid_argument("no seeds given");
  if (!(engine.threshold_gbps > 0)) throw std::invalid_argument("threshold must be positive");
  if (!(engine.window_h > 0)) throw std::invalid_argument("window must be positive");
  if (slots < 1) throw std::invalid_argument("slots must be positive");
  if (jobs < 0) throw std::invalid_argument("jobs must be >= 0");
  workload.validate();
}

std::vector<double> parse_loads(std::string_view text) {
  std::vector<double> loads;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("load range must be first:last:step");
    const double first = to_double(parts[0]);
    const double last = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0) || last < first) throw std::invalid_argument("bad load range");
    // Index-based so rounding cannot drop the last point.
    const auto n = static_cast<long>(std::floor((last - first) / step + 1e-9));
    for (long i = 0; i <= n; ++i) loads.push_back(first + static_cast<double>(i) * step);
  } else {
    for (auto p : split(text, ',')) loads.push_back(to_double(p));
  }
  return loads;
}

std::vector<std::uint64_t> parse_seeds(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  if (const auto pos = text.find(".."); pos != std::string_view::npos) {
    const auto first = to_u64(text.substr(0, pos));
    const auto last = to_u64(text.substr(pos + 2));
    if (last < first) throw std::invalid_argument("bad seed range");
    for (auto s = first; s <= last; ++s) seeds.push_back(s);
  } else {
    for (auto p : split(text, ',')) seeds.push_back(to_u64(p));
  }
  return seeds;
}

std::vector<PolicyConfig> parse_policies(std::string_view text) {
  std::vector<PolicyConfig> out;
  for (auto p : split(text, ',')) {
    if (p == "all") {
      for (const auto& q : PolicyConfig::all()) out.push_back(q);
    } else {
      out.push_back(PolicyConfig::parse(p));
    }
  }
  return out;
}

OeOrder parse_oe_order(std::string_view text) {
  if (text == "E-first") return OeOrder::kElectricFirst;
  if (text == "O-first") return OeOrder::kOpticalFirst;
  throw std::invalid_argument("oe-order must be E-first or O-first");
}

std::vector<ServiceRequest> cell_workload(const RunConfig& config, double load,
                                          std::uint64_t seed, int node_count) {
  if (!config.trace_in.empty()) {
    std::ifstream in(config.trace_in);
    if (!in) throw std::runtime_error("cannot open trace " + config.trace_in);
    return read_trace_csv(in);
  }
  WorkloadConfig w = config.workload;
  w.lambda_per_node = load * w.mu;
  w.seed = seed;
  return generate(w, node_count);
}

SweepResult run_sweep(const MultiLayerNet& net, const RunConfig& config,
                      const std::function<void(std::size_t, std::size_t)>& progress) {
  config.validate();
  SweepResult sweep;
  sweep.priorities = config.engine.priorities;
  for (double load : config.loads)
    for (const auto& policy : config.policies)
      for (auto seed : config.seeds) sweep.cells.push_back({load, policy.name(), seed, {}});

  // One workload per (load, seed), shared by every policy.
  std::map<std::pair<double, std::uint64_t>, std::vector<ServiceRequest>> workloads;
  for (double load : config.loads)
    for (auto seed : config.seeds)
      workloads[{load, seed}] = cell_workload(config, load, seed, net.node_count());
  if (!config.trace_out.empty()) {
    std::ofstream out(config.trace_out);
    if (!out) throw std::runtime_error("cannot write trace " + config.trace_out);
    write_trace_csv(out, workloads.at({config.loads.front(), config.seeds.front()}));
  }

  const std::size_t total = sweep.cells.size();
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      auto& cell = sweep.cells[i];
      try {
        const auto& work = workloads.at({cell.load, cell.seed});
        cell.report = run(net, work, PolicyConfig::parse(cell.policy), config.engine);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = total;
        return;
      }
      std::lock_guard lock(mu);
      ++done;
      if (progress) progress(done, total);
    }
  };
  unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return sweep;
}

void write_bbp_csv(std::ostream& out, const SweepResult& sweep) {
  out << "load_erlang,policy,seed,priority,bbp\n";
  for (const auto& cell : sweep.cells) {
    const auto prefix = num(cell.load) + "," + cell.policy + "," + std::to_string(cell.seed) + ",";
    for (int p = 1; p <= sweep.priorities; ++p)
      out << prefix << p << "," << num(cell.report.bbp_by_priority.at(p)) << "\n";
    out << prefix << "all," << num(cell.report.bbp) << "\n";
  }
}

void write_series_csv(std::ostream& out, const SweepResult& sweep, double load) {
  out << "time_h,policy,throughput_gbps,bbp_window\n";
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SimulationReport*>> by_policy;
  for (const auto& cell : sweep.cells) {
    if (cell.load != load) continue;
    if (!by_policy.contains(cell.policy)) order.push_back(cell.policy);
    by_policy[cell.policy].push_back(&cell.report);
  }
  for (const auto& policy : order) {
    const auto& reports = by_policy[policy];
    std::size_t windows = 0;
    for (const auto* r : reports) windows = std::max(windows, r->series.size());
    for (std::size_t w = 0; w < windows; ++w) {
      double time = 0, throughput = 0, bbp = 0;
      for (const auto* r : reports) {
        if (w >= r->series.size()) continue;  // run already drained: zero
        time = r->series[w].time_h;
        throughput += r->series[w].throughput_gbps;
        bbp += r->series[w].bbp;
      }
      const auto n = static_cast<double>(reports.size());
      out << num(time) << "," << policy << "," << num(throughput / n) << "," << num(bbp / n)
          << "\n";
    }
  }
}

void write_summary(std::ostream& out, const SweepResult& sweep) {
  struct Stats {
    std::vector<std::vector<double>> values;  // [priority 0 = all][seed]
  };
  std::vector<std::pair<double, std::string>> order;
  std::map<std::pair<double, std::string>, Stats> stats;
  for (const auto& cell : sweep.cells) {
    const std::pair key{cell.load, cell.policy};
    auto [it, fresh] = stats.try_emplace(key);
    if (fresh) {
      order.push_back(key);
      it->second.values.resize(static_cast<std::size_t>(sweep.priorities) + 1);
    }
    it->second.values[0].push_back(cell.report.bbp);
    for (int p = 1; p <= sweep.priorities; ++p)
      it->second.values[p].push_back(cell.report.bbp_by_priority.at(p));
  }
  auto mean_se = [](const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double se = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1) /
                                               static_cast<double>(v.size()))
                                   : 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4e +- %.2e", mean, se);
    return std::string(buf);
  };
  out << "BBP mean +- stderr over seeds\n";
  for (const auto& key : order) {
    const auto& s = stats.at(key);
    out << "load " << num(key.first) << "  " << key.second << "  n=" << s.values[0].size()
        << "\n  all  " << mean_se(s.values[0]) << "\n";
    for (int p = 1; p <= sweep.priorities; ++p) out << "  p" << p << "   " << mean_se(s.values[p]) << "\n";
  }
}

}  // namespace eon
