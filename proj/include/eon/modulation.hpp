#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eon {

struct ModulationFormat {
  std::string name;
  int level;            // constellation size
  int bits_per_symbol;  // log2(level)
  double slot_bandwidth_ghz;
  double rate_per_slot_gbps;
  double reach_km;
};

// Modulation format vs. per-slot data rate vs. transmission reach.
class ModulationTable {
 public:
  explicit ModulationTable(std::vector<ModulationFormat> formats);

  // BPSK/QPSK/8QAM/16QAM over 12.5 GHz slots.
  static ModulationTable standard();

  const std::vector<ModulationFormat>& formats() const { return formats_; }
  const ModulationFormat& format(int level) const;

  double reach(int level) const { return format(level).reach_km; }
  double rate_per_slot(int level) const { return format(level).rate_per_slot_gbps; }
  int bits_per_symbol(int level) const { return format(level).bits_per_symbol; }

  // Level new lightpaths start at when no better format is requested.
  int default_level() const { return formats_.front().level; }

  // Highest level whose reach covers `km`; nullopt beyond the longest reach.
  std::optional<int> best_level_for_distance(double km) const;

  // Slots needed to carry `gbps` at `level`.
  int slots_for(double gbps, int level) const;

 private:
  std::vector<ModulationFormat> formats_;  // ascending level
};

}  // namespace eon
