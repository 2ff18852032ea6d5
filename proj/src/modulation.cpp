#include "eon/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eon {

ModulationTable::ModulationTable(std::vector<ModulationFormat> formats)
    : formats_(std::move(formats)) {
  if (formats_.empty()) throw std::invalid_argument("empty modulation table");
  std::sort(formats_.begin(), formats_.end(),
            [](const auto& a, const auto& b) { return a.level < b.level; });
  for (std::size_t i = 1; i < formats_.size(); ++i) {
    if (formats_[i].level == formats_[i - 1].level ||
        formats_[i].reach_km >= formats_[i - 1].reach_km) {
      throw std::invalid_argument("reach must strictly decrease with modulation level");
    }
  }
}

ModulationTable ModulationTable::standard() {
  return ModulationTable({
      {"BPSK", 2, 1, 12.5, 12.5, 9600.0},
      {"QPSK", 4, 2, 12.5, 25.0, 4800.0},
      {"8QAM", 8, 3, 12.5, 37.5, 2400.0},
      {"16QAM", 16, 4, 12.5, 50.0, 1200.0},
  });
}

const ModulationFormat& ModulationTable::format(int level) const {
  for (const auto& f : formats_) {
    if (f.level == level) return f;
  }
  throw std::invalid_argument("unknown modulation level " + std::to_string(level));
}

std::optional<int> ModulationTable::best_level_for_distance(double km) const {
  for (auto it = formats_.rbegin(); it != formats_.rend(); ++it) {
    if (km <= it->reach_km) return it->level;
  }
  return std::nullopt;
}

int ModulationTable::slots_for(double gbps, int level) const {
  if (gbps <= 0) throw std::invalid_argument("bandwidth must be positive");
  // Guard against 150/12.5 landing a hair above 12.
  return static_cast<int>(std::ceil(gbps / rate_per_slot(level) - 1e-9));
}

}  // namespace eon
