#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eon {

// Per-fiber slot occupancy. Slots are numbered 1..size(); a set bit means the
// slot is utilized.
class SpectrumMask {
 public:
  SpectrumMask() = default;
  explicit SpectrumMask(int slots);

  // Parses a '0'/'1' string, leftmost character is slot 1.
  static SpectrumMask from_string(std::string_view bits);

  int size() const { return slots_; }
  bool used(int slot) const;
  bool range_free(int first, int last) const;
  int used_count() const;
  int free_count() const { return slots_ - used_count(); }

  void set(int first, int last);
  void clear(int first, int last);

  SpectrumMask& operator|=(const SpectrumMask& other);
  bool operator==(const SpectrumMask& other) const = default;

  std::string to_string() const;

 private:
  void check_range(int first, int last) const;

  int slots_ = 0;
  std::vector<std::uint64_t> words_;
};

// Maximal runs of free slots, as inclusive [first, last] pairs, ascending.
struct SlotRun {
  int first;
  int last;
  int length() const { return last - first + 1; }
  bool operator==(const SlotRun&) const = default;
};

std::vector<SlotRun> free_runs(const SpectrumMask& mask);

}  // namespace eon
