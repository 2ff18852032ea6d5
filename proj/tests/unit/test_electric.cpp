#include "doctest.h"
#include "eon/electric.hpp"
#include "eon/layer.hpp"
#include "fixtures.hpp"

using doctest::Approx;
using eon::MultiLayerNet;

namespace {
// One 150 Gbps lightpath 0->1.
struct OneLink {
  MultiLayerNet net = fixture::line(2, 20);
  eon::LightpathId lp = net.add_lightpath(fixture::forward(net, 0, 1), 1, 12, 2);

  eon::DegradedRoute route() const {
    return *eon::min_rh_route(eon::electric_view(net), 0, 1);
  }
};
}  // namespace

TEST_CASE("maximum degradation extent") {
  auto r = fixture::request(1, 0, 1, 10, 0, 2, 0.25);
  r.deadline = 2;
  r.rate = 10;
  CHECK(eon::max_degraded_rate(r, 1) == Approx(10.0 / 3));
  CHECK(eon::max_degraded_rate(r, 0) == Approx(10.0 * 2 / 4));
  r.deadline = 0;
  CHECK(eon::max_degraded_rate(r, 0.5) == Approx(10));
  // Tolerance floor wins over the deadline bound.
  auto s = fixture::request(2, 0, 1, 10, 0, 2, 0.8);
  s.deadline = 2;
  s.rate = 10;
  CHECK(eon::max_degraded_rate(s, 1) == Approx(8));
  // Past the deadline window there is nothing left to give.
  CHECK(eon::max_degraded_rate(s, 5) == Approx(10));
}

TEST_CASE("free route admits undegraded with an empty plan") {
  OneLink f;
  const auto plan = eon::ed_ba(f.net, f.route(), fixture::request(1, 0, 1, 100), 0);
  REQUIRE(plan);
  CHECK(plan->degraded.empty());
  CHECK(plan->admitted_rate == 100);
  CHECK(plan->admitted_finish == Approx(1));
}

TEST_CASE("only requests of no higher priority are degraded") {
  OneLink f;
  f.net.admit_request(fixture::request(1, 0, 1, 100, 0, 1, 0.25, 1), {f.lp}, 100, 0);
  f.net.admit_request(fixture::request(2, 0, 1, 40, 0, 1, 0.25, 5), {f.lp}, 40, 0);
  const auto r0 = fixture::request(3, 0, 1, 30, 0, 1, 0.5, 3);
  const auto before = f.net.requests();
  const auto plan = eon::ed_ba(f.net, f.route(), r0, 0);
  REQUIRE(plan);
  CHECK(f.net.requests().at(1).rate == 100);  // planning does not mutate
  REQUIRE(plan->degraded.size() == 1);
  CHECK(plan->degraded[0].id == 1);
  CHECK(plan->degraded[0].new_rate == Approx(25));
  CHECK(plan->degraded[0].new_finish == Approx(4));
  CHECK(plan->admitted_rate == 30);
  eon::apply_allocation(f.net, r0, *plan, 0);
  CHECK(f.net.request(2).rate == 40);
  CHECK(f.net.request(1).rate == Approx(25));
  CHECK(f.net.request(1).finish_time() <= f.net.request(1).latest_finish() + 1e-9);
  f.net.check_consistency();
}

TEST_CASE("arrival degrades itself when lower classes are not enough") {
  OneLink f;
  f.net.admit_request(fixture::request(1, 0, 1, 140, 0, 1, 1.0, 1), {f.lp}, 140, 0);
  const auto r0 = fixture::request(2, 0, 1, 40, 0, 1, 0.25, 1);
  const auto plan = eon::ed_ba(f.net, f.route(), r0, 0);
  REQUIRE(plan);
  CHECK(plan->degraded.empty());
  CHECK(plan->admitted_rate == Approx(10));
  CHECK(plan->arrival_degraded(r0));
  CHECK(plan->admitted_finish == Approx(4));
}

TEST_CASE("infeasible link blocks and leaves state untouched") {
  OneLink f;
  f.net.admit_request(fixture::request(1, 0, 1, 100, 0, 1, 0.9, 1), {f.lp}, 100, 0);
  f.net.admit_request(fixture::request(2, 0, 1, 50, 0, 1, 0.25, 4), {f.lp}, 50, 0);
  const auto snapshot = f.net.requests();
  const auto r0 = fixture::request(3, 0, 1, 60, 0, 1, 0.9, 2);
  CHECK_FALSE(eon::ed_ba(f.net, f.route(), r0, 0));
  CHECK(f.net.requests().at(1).rate == snapshot.at(1).rate);
  CHECK(f.net.requests().at(2).rate == snapshot.at(2).rate);
}

TEST_CASE("degradation order: lower priority first, stop once enough is freed") {
  OneLink f;
  f.net.admit_request(fixture::request(1, 0, 1, 50, 0, 1, 0.5, 2), {f.lp}, 50, 0);
  f.net.admit_request(fixture::request(2, 0, 1, 50, 0, 1, 0.5, 1), {f.lp}, 50, 0);
  f.net.admit_request(fixture::request(3, 0, 1, 50, 0, 1, 0.5, 1), {f.lp}, 50, 0);
  const auto r0 = fixture::request(4, 0, 1, 40, 0, 1, 1.0, 3);
  const auto plan = eon::ed_ba(f.net, f.route(), r0, 0);
  REQUIRE(plan);
  REQUIRE(plan->degraded.size() == 2);
  CHECK(plan->degraded[0].id == 2);
  CHECK(plan->degraded[1].id == 3);
  // Dropping the last degradation must leave too little room.
  CHECK(plan->degraded[0].old_rate - plan->degraded[0].new_rate < r0.bw);
}

TEST_CASE("electric route must connect the arrival") {
  OneLink f;
  CHECK_THROWS(eon::ed_ba(f.net, f.route(), fixture::request(1, 1, 0, 10), 0));
  CHECK_THROWS(eon::ed_ba(f.net, eon::DegradedRoute{}, fixture::request(1, 0, 1, 10), 0));
}
