#include <stdexcept>

#include "doctest.h"
#include "eon/spectrum.hpp"

using eon::SlotRun;
using eon::SpectrumMask;

TEST_CASE("mask parses and prints slot 1 leftmost") {
  auto m = SpectrumMask::from_string("1100000001");
  CHECK(m.size() == 10);
  CHECK(m.used(1));
  CHECK(m.used(2));
  CHECK_FALSE(m.used(3));
  CHECK(m.used(10));
  CHECK(m.used_count() == 3);
  CHECK(m.free_count() == 7);
  CHECK(m.to_string() == "1100000001");
  CHECK_THROWS_AS(SpectrumMask::from_string("10x"), std::invalid_argument);
}

TEST_CASE("set, clear and range checks across word boundaries") {
  SpectrumMask m(130);
  m.set(60, 70);
  CHECK(m.used_count() == 11);
  CHECK_FALSE(m.range_free(70, 71));
  CHECK(m.range_free(71, 130));
  m.clear(64, 66);
  CHECK(m.used_count() == 8);
  CHECK(m.range_free(64, 66));
  CHECK_THROWS(m.set(0, 3));
  CHECK_THROWS(m.set(5, 131));
  CHECK_THROWS(m.set(9, 8));
}

TEST_CASE("union of masks") {
  auto a = SpectrumMask::from_string("1100000000");
  a |= SpectrumMask::from_string("1010000000");
  CHECK(a.to_string() == "1110000000");
}

TEST_CASE("free runs") {
  CHECK(eon::free_runs(SpectrumMask(5)) == std::vector<SlotRun>{{1, 5}});
  CHECK(eon::free_runs(SpectrumMask::from_string("11111")).empty());
  CHECK(eon::free_runs(SpectrumMask::from_string("0110010")) ==
        std::vector<SlotRun>{{1, 1}, {4, 5}, {7, 7}});
}
