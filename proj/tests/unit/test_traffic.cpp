#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "eon/traffic.hpp"

using eon::WorkloadConfig;

TEST_CASE("same seed, same stream; different seed, different stream") {
  WorkloadConfig c;
  c.duration_h = 0.2;
  const auto a = eon::generate(c, 24);
  const auto b = eon::generate(c, 24);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].arrival == b[i].arrival);
    CHECK(a[i].bw == b[i].bw);
    CHECK(a[i].src == b[i].src);
  }
  c.seed = 2;
  const auto d = eon::generate(c, 24);
  CHECK((d.size() != a.size() || d.front().arrival != a.front().arrival));
}

TEST_CASE("request fields stay in range") {
  WorkloadConfig c;
  c.duration_h = 0.5;
  const auto reqs = eon::generate(c, 6);
  REQUIRE(!reqs.empty());
  double last = 0;
  std::set<int> priorities;
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    const auto& r = reqs[i];
    CHECK(r.id == static_cast<eon::RequestId>(i) + 1);
    CHECK(r.src != r.dst);
    CHECK(r.src >= 0);
    CHECK(r.dst < 6);
    CHECK(r.bw >= 5);
    CHECK(r.bw <= 150);
    CHECK(r.tolerance >= 0.25);
    CHECK(r.tolerance <= 1.0);
    CHECK(r.deadline == doctest::Approx(r.holding * (1 / r.tolerance - 1)));
    CHECK(r.arrival >= last);
    CHECK(r.arrival <= 0.5);
    last = r.arrival;
    priorities.insert(r.priority);
  }
  CHECK(priorities == std::set<int>{1, 2, 3, 4, 5});
}

TEST_CASE("large-sample means") {
  WorkloadConfig c;  // 300 arrivals per node per hour, mu = 10
  const int n = 24;
  c.duration_h = 1e5 / (c.lambda_per_node * n);
  const auto reqs = eon::generate(c, n);
  REQUIRE(reqs.size() > 95000);
  double bw = 0, holding = 0;
  std::vector<int> per_priority(6, 0);
  for (const auto& r : reqs) {
    bw += r.bw;
    holding += r.holding;
    ++per_priority[r.priority];
  }
  const double count = static_cast<double>(reqs.size());
  CHECK(std::abs(bw / count - 77.5) < 1);
  const double load = count / c.duration_h / n * (holding / count);
  CHECK(std::abs(load - 30) / 30 < 0.02);
  for (int p = 1; p <= 5; ++p) CHECK(std::abs(per_priority[p] / count - 0.2) < 0.01);
}

TEST_CASE("stepped bandwidth grid") {
  WorkloadConfig c;
  c.bw_step = 5;
  c.duration_h = 0.2;
  for (const auto& r : eon::generate(c, 10)) CHECK(std::fmod(r.bw, 5) == 0);
}

TEST_CASE("trace round trip is exact") {
  WorkloadConfig c;
  c.duration_h = 0.1;
  const auto reqs = eon::generate(c, 8);
  std::stringstream buf;
  eon::write_trace_csv(buf, reqs);
  CHECK(buf.str().rfind("arrival_time,s,d,bw_gbps,holding_h,deadline_h,priority,tolerance\n", 0) == 0);
  const auto back = eon::read_trace_csv(buf);
  REQUIRE(back.size() == reqs.size());
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    CHECK(back[i].id == reqs[i].id);
    CHECK(back[i].arrival == reqs[i].arrival);
    CHECK(back[i].holding == reqs[i].holding);
    CHECK(back[i].deadline == reqs[i].deadline);
    CHECK(back[i].tolerance == reqs[i].tolerance);
    CHECK(back[i].bw == reqs[i].bw);
    CHECK(back[i].priority == reqs[i].priority);
  }
  std::istringstream bad("arrival_time,s\n1,2,x\n");
  CHECK_THROWS(eon::read_trace_csv(bad));
}

TEST_CASE("config validation") {
  WorkloadConfig c;
  c.mu = 0;
  CHECK_THROWS(c.validate());
  c = {};
  c.tolerance_min = 0;
  CHECK_THROWS(c.validate());
  c = {};
  c.bw_max = 1;
  CHECK_THROWS(c.validate());
  CHECK_THROWS(eon::generate(WorkloadConfig{}, 1));
  CHECK(WorkloadConfig{}.erlang_per_node() == 30);
}
