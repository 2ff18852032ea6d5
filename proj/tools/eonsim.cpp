// Batch driver: (policy x load x seed) sweeps over a topology file.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "eon/experiment.hpp"
#include "eon/topology.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  eon::RunConfig config;
  std::string loads, policies = "baseline", seeds = "1", oe_order = "E-first";
  double lambda = 0;
  double series_load = 0;
  bool quiet = false;

  CLI::App app{"Degraded provisioning simulator for multi-layer elastic optical networks"};
  app.add_option("--topology", config.topology, "Topology file")->required();
  app.add_option("--slots", config.slots, "Spectrum slots per fiber")->default_val(300);
  app.add_option("--loads", loads, "Erlang per node: first:last:step or a,b,c");
  app.add_option("--policies", policies,
                 "baseline,OE-MinPDR,O-MinPDR,E-MinPDR,OE-MinRH,O-MinRH,E-MinRH or all")
      ->default_val("baseline");
  app.add_option("--seeds", seeds, "first..last or a,b,c")->default_val("1");
  app.add_option("--lambda", lambda, "Arrivals per node per hour (when --loads is absent)");
  app.add_option("--mu", config.workload.mu, "Departure rate per hour")->default_val(10);
  app.add_option("--threshold", config.engine.threshold_gbps, "Grooming threshold, Gbps")
      ->default_val(150);
  app.add_option("--window", config.engine.window_h, "Series window, hours")->default_val(0.05);
  app.add_option("--duration", config.workload.duration_h, "Arrival horizon, hours")
      ->default_val(1.5);
  app.add_option("--out", config.out_dir, "Output directory")->default_val(".");
  app.add_option("--oe-order", oe_order, "E-first or O-first")->default_val("E-first");
  app.add_option("--trace-out", config.trace_out, "Export the first cell's workload as CSV");
  app.add_option("--trace-in", config.trace_in, "Replay a workload CSV in every cell");
  app.add_option("--series-load", series_load, "Load whose series.csv is written");
  app.add_option("--jobs", config.jobs, "Worker threads, 0 = all cores")->default_val(0);
  app.add_flag("--quiet", quiet, "No progress output");

  try {
    app.parse(argc, argv);
    if (!loads.empty()) {
      config.loads = eon::parse_loads(loads);
    } else if (lambda > 0) {
      config.loads = {lambda / config.workload.mu};
    }
    config.policies = eon::parse_policies(policies);
    config.seeds = eon::parse_seeds(seeds);
    config.engine.oe_order = eon::parse_oe_order(oe_order);
    if (app.count("--series-load") > 0) config.series_load = series_load;
    config.validate();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    auto net = eon::load_topology_file(config.topology, config.slots);
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    const fs::path dir(config.out_dir);
    std::ofstream bbp(dir / "bbp.csv"), series(dir / "series.csv"), summary(dir / "summary.txt");
    if (!bbp || !series || !summary) {
      std::cerr << "error: cannot write to " << config.out_dir << "\n";
      return 1;
    }
    auto progress = [&](std::size_t done, std::size_t total) {
      if (!quiet) std::cerr << "\r" << done << "/" << total << " cells" << std::flush;
    };
    const auto sweep = eon::run_sweep(net, config, progress);
    if (!quiet) std::cerr << "\n";
    eon::write_bbp_csv(bbp, sweep);
    eon::write_series_csv(series, sweep, config.series_load.value_or(config.loads.front()));
    eon::write_summary(summary, sweep);
    if (!bbp || !series || !summary) {
      std::cerr << "error: writing results failed\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
