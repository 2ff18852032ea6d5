#include "doctest.h"
#include "eon/metrics.hpp"
#include "fixtures.hpp"

using doctest::Approx;
using eon::MetricsAccumulator;

TEST_CASE("BBP is bandwidth weighted") {
  MetricsAccumulator m;
  CHECK(m.bbp() == 0);
  for (int i = 1; i <= 9; ++i) m.record_arrival(fixture::request(i, 0, 1, 10, 0, 1, 0.5, 1), false);
  CHECK(m.bbp() == 0);
  m.record_arrival(fixture::request(10, 0, 1, 10, 0, 1, 0.5, 1), true);
  CHECK(m.bbp() == Approx(0.1));
  CHECK(m.offered() == Approx(100));
  CHECK(m.blocked() == Approx(10));
  CHECK(m.bbp(5) == 0);
  CHECK(m.bbp(1) == Approx(0.1));
}

TEST_CASE("aggregate BBP is the offered-weighted mean of class BBPs") {
  MetricsAccumulator m;
  m.record_arrival(fixture::request(1, 0, 1, 30, 0, 1, 0.5, 1), true);
  m.record_arrival(fixture::request(2, 0, 1, 70, 0, 1, 0.5, 1), false);
  m.record_arrival(fixture::request(3, 0, 1, 50, 0, 1, 0.5, 3), true);
  m.record_arrival(fixture::request(4, 0, 1, 5, 0, 1, 0.5, 5), false);
  double weighted = 0;
  for (int p = 1; p <= 5; ++p) weighted += m.bbp(p) * m.offered(p);
  CHECK(m.bbp() == Approx(weighted / m.offered()));
  CHECK_THROWS(m.record_arrival(fixture::request(5, 0, 1, 5, 0, 1, 0.5, 6), false));
}

TEST_CASE("series: idle, constant and piecewise rates") {
  MetricsAccumulator idle(0.05);
  idle.advance(0.15, 0);
  for (const auto& p : idle.instantaneous_series()) CHECK(p.throughput_gbps == 0);

  MetricsAccumulator m(0.05);
  m.advance(0.15, 10);
  auto s = m.instantaneous_series();
  REQUIRE(s.size() == 3);
  for (const auto& p : s) CHECK(p.throughput_gbps == Approx(10));
  CHECK(s[1].time_h == Approx(0.05));

  MetricsAccumulator d(0.05);
  d.advance(0.02, 10);  // 10 Gbps until 0.02, then 4 Gbps
  d.advance(0.05, 4);
  CHECK(d.instantaneous_series().at(0).throughput_gbps == Approx((10 * 0.02 + 4 * 0.03) / 0.05));
  CHECK(d.carried_volume() == Approx(0.32));
  CHECK_THROWS(d.advance(0.01, 1));
}

TEST_CASE("windowed BBP counts arrivals by window") {
  MetricsAccumulator m(0.1);
  m.record_arrival(fixture::request(1, 0, 1, 10, 0.01), true);
  m.record_arrival(fixture::request(2, 0, 1, 30, 0.02), false);
  m.record_arrival(fixture::request(3, 0, 1, 10, 0.15), false);
  m.advance(0.2, 0);
  const auto s = m.instantaneous_series();
  REQUIRE(s.size() == 2);
  CHECK(s[0].bbp == Approx(0.25));
  CHECK(s[1].bbp == 0);
}
