#include "eon/spectrum.hpp"

#include <bit>
#include <stdexcept>

namespace eon {

SpectrumMask::SpectrumMask(int slots) : slots_(slots) {
  if (slots <= 0) throw std::invalid_argument("spectrum needs at least one slot");
  words_.assign(static_cast<std::size_t>((slots + 63) / 64), 0);
}

SpectrumMask SpectrumMask::from_string(std::string_view bits) {
  SpectrumMask mask(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask.set(static_cast<int>(i) + 1, static_cast<int>(i) + 1);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("spectrum string must contain only 0 and 1");
    }
  }
  return mask;
}

void SpectrumMask::check_range(int first, int last) const {
  if (first < 1 || last > slots_ || first > last) {
    throw std::out_of_range("slot range [" + std::to_string(first) + ", " +
                            std::to_string(last) + "] outside 1.." +
                            std::to_string(slots_));
  }
}

bool SpectrumMask::used(int slot) const {
  check_range(slot, slot);
  const int bit = slot - 1;
  return (words_[bit / 64] >> (bit % 64)) & 1U;
}

bool SpectrumMask::range_free(int first, int last) const {
  check_range(first, last);
  for (int s = first; s <= last; ++s) {
    if (used(s)) return false;
  }
  return true;
}

int SpectrumMask::used_count() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

void SpectrumMask::set(int first, int last) {
  check_range(first, last);
  for (int s = first - 1; s < last; ++s) words_[s / 64] |= (std::uint64_t{1} << (s % 64));
}

void SpectrumMask::clear(int first, int last) {
  check_range(first, last);
  for (int s = first - 1; s < last; ++s) words_[s / 64] &= ~(std::uint64_t{1} << (s % 64));
}

SpectrumMask& SpectrumMask::operator|=(const SpectrumMask& other) {
  if (other.slots_ != slots_) throw std::invalid_argument("spectrum size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::string SpectrumMask::to_string() const {
  std::string out(static_cast<std::size_t>(slots_), '0');
  for (int s = 1; s <= slots_; ++s) {
    if (used(s)) out[static_cast<std::size_t>(s - 1)] = '1';
  }
  return out;
}

std::vector<SlotRun> free_runs(const SpectrumMask& mask) {
  std::vector<SlotRun> runs;
  int start = 0;
  for (int s = 1; s <= mask.size(); ++s) {
    if (!mask.used(s)) {
      if (start == 0) start = s;
    } else if (start != 0) {
      runs.push_back({start, s - 1});
      start = 0;
    }
  }
  if (start != 0) runs.push_back({start, mask.size()});
  return runs;
}

}  // namespace eon
