#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eon/engine.hpp"
#include "eon/traffic.hpp"

namespace eon {

// One (policy x load x seed) sweep.
struct RunConfig {
  std::string topology;
  int slots = 300;
  std::vector<double> loads{30};  // Erlang per node
  std::vector<PolicyConfig> policies{PolicyConfig{}};
  std::vector<std::uint64_t> seeds{1};
  WorkloadConfig workload;  // lambda_per_node and seed are set per cell
  EngineConfig engine;
  std::string out_dir = ".";
  std::string trace_in;   // replay this workload in every cell
  std::string trace_out;  // export the first cell's workload
  std::optional<double> series_load;  // load whose time series is written; default first
  int jobs = 0;                       // 0 = hardware concurrency

  void validate() const;
};

// "26:44:2" (inclusive range) or "26,30,34".
std::vector<double> parse_loads(std::string_view text);
// "1..20" (inclusive range) or "1,4,9".
std::vector<std::uint64_t> parse_seeds(std::string_view text);
// Comma-separated policy names.
std::vector<PolicyConfig> parse_policies(std::string_view text);
OeOrder parse_oe_order(std::string_view text);

struct CellResult {
  double load = 0;
  std::string policy;
  std::uint64_t seed = 0;
  SimulationReport report;
};

// Cells in (load, policy, seed) order of the config's lists.
struct SweepResult {
  std::vector<CellResult> cells;
  int priorities = 5;
};

// Workload of one cell: the replayed trace or a fresh Poisson draw.
std::vector<ServiceRequest> cell_workload(const RunConfig& config, double load,
                                          std::uint64_t seed, int node_count);

SweepResult run_sweep(const MultiLayerNet& net, const RunConfig& config,
                      const std::function<void(std::size_t done, std::size_t total)>& progress = {});

// load_erlang,policy,seed,priority,bbp -- one row per priority and one "all" row per cell.
void write_bbp_csv(std::ostream& out, const SweepResult& sweep);
// time_h,policy,throughput_gbps,bbp_window -- seed-averaged windows at `load`.
void write_series_csv(std::ostream& out, const SweepResult& sweep, double load);
// Mean +- standard error across seeds per (load, policy).
void write_summary(std::ostream& out, const SweepResult& sweep);

}  // namespace eon
