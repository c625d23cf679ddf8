#include "doctest.h"

#include <algorithm>

#include "coflowsim/baselines.hpp"
#include "coflowsim/scheduler.hpp"
#include "coflowsim/verify.hpp"
#include "helpers.hpp"

using namespace coflowsim;

namespace {

bool has_kind(const VerifyReport& report, const std::string& kind) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("[verify] clean runs verify clean") {
  for (std::uint64_t seed : {31ull, 32ull}) {
    const Workload w = testutil::random_instance(seed, 5, 2, 8, 1.0);
    const SchedulerOutput out = run(w);
    CHECK(verify_schedule(out.schedule, out.assignment, w).ok());
    const SchedulerOutput rnd = run_baseline(BaselineKind::Random, w, seed);
    CHECK(verify_schedule(rnd.schedule, rnd.assignment, w).ok());
  }
}

TEST_CASE("[verify] tampering is caught") {
  const Workload w = testutil::random_instance(33, 5, 2, 8, 1.0);
  const SchedulerOutput out = run(w);
  REQUIRE(out.schedule.events.size() >= 2);

  SUBCASE("wrong size breaks coverage") {
    Schedule bad = out.schedule;
    bad.events[0].size += 0.5;
    CHECK(has_kind(verify_schedule(bad, out.assignment, w), "coverage"));
  }
  SUBCASE("a dropped event breaks coverage") {
    Schedule bad = out.schedule;
    bad.events.pop_back();
    CHECK(has_kind(verify_schedule(bad, out.assignment, w), "coverage"));
  }
  SUBCASE("a duplicated event breaks coverage") {
    Schedule bad = out.schedule;
    bad.events.push_back(bad.events.front());
    CHECK(has_kind(verify_schedule(bad, out.assignment, w), "coverage"));
  }
  SUBCASE("broken finish arithmetic breaks timing") {
    Schedule bad = out.schedule;
    bad.events[0].finish += 0.25;
    const VerifyReport report = verify_schedule(bad, out.assignment, w);
    CHECK(has_kind(report, "timing"));
  }
  SUBCASE("negative establish breaks timing") {
    Schedule bad = out.schedule;
    bad.events[0].establish = -1.0;
    bad.events[0].start = bad.events[0].establish + w.config().delta;
    CHECK(has_kind(verify_schedule(bad, out.assignment, w), "timing"));
  }
  SUBCASE("delaying a circuit breaks work conservation") {
    Schedule bad = out.schedule;
    // push the last event well past every teardown on its ports
    double latest = 0.0;
    for (const CircuitEvent& e : bad.events) latest = std::max(latest, e.finish);
    CircuitEvent& e = bad.events.back();
    const double shift = latest + 5.0 - e.establish;
    e.establish += shift;
    e.start += shift;
    e.finish += shift;
    CHECK(has_kind(verify_schedule(bad, out.assignment, w), "work_conservation"));
  }
  SUBCASE("unknown ids and cores are structural") {
    Schedule bad = out.schedule;
    bad.events[0].coflow_id = 424242;
    CHECK(has_kind(verify_schedule(bad, out.assignment, w), "structure"));
    Schedule bad2 = out.schedule;
    bad2.events[0].core = 17;
    CHECK(has_kind(verify_schedule(bad2, out.assignment, w), "structure"));
  }
}

TEST_CASE("[verify] overlapping circuits on one port are flagged") {
  const Workload w({testutil::coflow(1, 1.0, {{2, 3}, {0, 0}})},
                   testutil::ocs(2, {1.0}, 1.0));
  const SchedulerOutput out = run(w);
  REQUIRE(out.schedule.events.size() == 2);
  Schedule bad = out.schedule;
  // drag the second circuit onto the first one's ingress occupancy
  CircuitEvent& e = bad.events[1];
  const double shift = e.establish - out.schedule.events[0].establish - 0.5;
  e.establish -= shift;
  e.start -= shift;
  e.finish -= shift;
  CHECK(has_kind(verify_schedule(bad, out.assignment, w), "port_exclusivity"));
}

TEST_CASE("[verify] shape mismatches throw instead of reporting") {
  const Workload w = testutil::random_instance(34, 4, 2, 3, 1.0);
  const SchedulerOutput out = run(w);
  const Workload other = testutil::random_instance(35, 4, 2, 4, 1.0);
  CHECK_THROWS_AS(verify_schedule(out.schedule, out.assignment, other),
                  DimensionMismatchError);
}

}  // TEST_SUITE
