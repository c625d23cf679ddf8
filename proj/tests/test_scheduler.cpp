#include "doctest.h"

#include "coflowsim/scheduler.hpp"
#include "helpers.hpp"

using namespace coflowsim;
using testutil::coflow;
using testutil::ocs;

TEST_SUITE("scheduler") {

TEST_CASE("[scheduler] coflows order by weight over floor, stable on ties") {
  // floors with one core rate 1, delta 1: [[1]] -> 2, [[3]] -> 4
  const Workload w({coflow(1, 2.0, {{1}}), coflow(2, 1.0, {{3}})}, ocs(1, {1.0}, 1.0));
  CHECK(order_coflows(w) == std::vector<int>{0, 1});  // scores 1.0 > 0.25

  const Workload flipped({coflow(1, 1.0, {{3}}), coflow(2, 2.0, {{1}})}, ocs(1, {1.0}, 1.0));
  CHECK(order_coflows(flipped) == std::vector<int>{1, 0});

  const Workload tied({coflow(1, 1.0, {{2}}), coflow(2, 1.0, {{2}})}, ocs(1, {1.0}, 1.0));
  CHECK(order_coflows(tied) == std::vector<int>{0, 1});
}

TEST_CASE("[scheduler] flows flatten largest-first with lexicographic ties") {
  const Workload w({coflow(1, 1.0, {{1, 3}, {3, 2}}), coflow(2, 1.0, {{0, 5}, {0, 0}})},
                   ocs(2, {1.0}, 0.0));
  const std::vector<int> order{1, 0};
  const std::vector<FlowRef> flows = priority_flows(w, order);
  REQUIRE(flows.size() == 5);
  CHECK(flows[0].coflow_id == 2);  // ordered coflow first
  CHECK(flows[0].size == 5.0);
  // within coflow 1: sizes 3,3 tie broken by (ingress, egress), then 2, 1
  CHECK(flows[1].size == 3.0);
  CHECK(flows[1].ingress == 0);
  CHECK(flows[1].egress == 1);
  CHECK(flows[2].size == 3.0);
  CHECK(flows[2].ingress == 1);
  CHECK(flows[2].egress == 0);
  CHECK(flows[3].size == 2.0);
  CHECK(flows[4].size == 1.0);
}

TEST_CASE("[scheduler] a flow lands on the core with the smallest new floor") {
  // one flow of size 4, rates (1, 2), delta 1: floors 5 vs 3 -> core 1
  const Workload w({coflow(1, 1.0, {{4}})}, ocs(1, {1.0, 2.0}, 1.0));
  const AssignmentPlan plan = assign_flows(w, order_coflows(w));
  CHECK(plan.flow_core == std::vector<int>{1});
  CHECK(plan.matrices.at(0, 1).at(0, 0) == 4.0);
  CHECK(plan.matrices.at(0, 0).zero());
}

TEST_CASE("[scheduler] setup charges steer away from flow-crowded ports") {
  // rates (1, 4), delta 5. Flow one (size 8) lands on the fast core.
  // Flow two (size 4, same ingress): fast core would pay a second setup on
  // that ingress (floor 13), slow core pays one setup (floor 9).
  const Workload w({coflow(1, 1.0, {{8, 0}, {0, 0}}), coflow(2, 1.0, {{0, 4}, {0, 0}})},
                   ocs(2, {1.0, 4.0}, 5.0));
  const std::vector<int> order{0, 1};
  const AssignmentPlan plan = assign_flows(w, order);
  CHECK(plan.flow_core == std::vector<int>{1, 0});
  CHECK(plan.matrices.at(0, 1).at(0, 0) == 8.0);
  CHECK(plan.matrices.at(1, 0).at(0, 1) == 4.0);
}

TEST_CASE("[scheduler] ties between cores go to the lowest index") {
  const Workload w({coflow(1, 1.0, {{4}})}, ocs(1, {2.0, 2.0}, 1.0));
  const AssignmentPlan plan = assign_flows(w, order_coflows(w));
  CHECK(plan.flow_core == std::vector<int>{0});
}

TEST_CASE("[scheduler] event loop serializes a shared port") {
  const std::vector<FlowRef> flows{{1, 0, 0, 0, 2.0}, {2, 1, 0, 1, 3.0}};
  const std::vector<CircuitEvent> events = schedule_core(flows, 0, 1.0, 1.0);
  REQUIRE(events.size() == 2);
  CHECK(events[0].coflow_id == 1);
  CHECK(events[0].establish == 0.0);
  CHECK(events[0].start == 1.0);
  CHECK(events[0].finish == 3.0);
  CHECK(events[1].coflow_id == 2);
  CHECK(events[1].establish == 3.0);
  CHECK(events[1].start == 4.0);
  CHECK(events[1].finish == 7.0);
}

TEST_CASE("[scheduler] event loop runs disjoint ports in parallel") {
  const std::vector<FlowRef> flows{{1, 0, 0, 0, 2.0}, {2, 1, 1, 1, 3.0}};
  const std::vector<CircuitEvent> events = schedule_core(flows, 0, 1.0, 1.0);
  REQUIRE(events.size() == 2);
  CHECK(events[0].establish == 0.0);
  CHECK(events[0].finish == 3.0);
  CHECK(events[1].establish == 0.0);
  CHECK(events[1].finish == 4.0);
}

TEST_CASE("[scheduler] each flow takes the earliest window behind its senior flows") {
  // list order: A(0->0), B(0->1), C(1->1), rate 1, no setup. A holds ingress
  // 0 over [0,2), so B follows at 2; C then finds egress 1 taken over [2,3)
  // and its 5-wide window only opens at 3.
  const std::vector<FlowRef> flows{
      {1, 0, 0, 0, 2.0}, {2, 1, 0, 1, 1.0}, {3, 2, 1, 1, 5.0}};
  const std::vector<CircuitEvent> events = schedule_core(flows, 0, 1.0, 0.0);
  REQUIRE(events.size() == 3);
  CHECK(events[0].coflow_id == 1);
  CHECK(events[0].establish == 0.0);
  CHECK(events[1].coflow_id == 2);
  CHECK(events[1].establish == 2.0);
  CHECK(events[2].coflow_id == 3);
  CHECK(events[2].establish == 3.0);
}

TEST_CASE("[scheduler] a junior flow fills a gap without delaying senior flows") {
  // X(1->0) pins egress 0 over [0,5); A(0->0) must wait for it until 5; B's
  // 3-wide window fits wholly inside A's idle stretch on ingress 0, so the
  // junior flow runs first in time.
  const std::vector<FlowRef> flows{
      {1, 0, 1, 0, 5.0}, {2, 1, 0, 0, 1.0}, {3, 2, 0, 1, 3.0}};
  const std::vector<CircuitEvent> events = schedule_core(flows, 0, 1.0, 0.0);
  REQUIRE(events.size() == 3);
  CHECK(events[0].establish == 0.0);   // X
  CHECK(events[1].establish == 5.0);   // A waits for egress 0
  CHECK(events[2].establish == 0.0);   // B slots into [0,3) on ingress 0
  CHECK(events[1].finish == 6.0);
}

TEST_CASE("[scheduler] run produces feasible audited schedules") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    const Workload w = testutil::random_instance(seed, 6, 3, 10, 2.0);
    const SchedulerOutput out = run(w);
    out.assignment.validate_against(w);
    const VerifyReport report = verify_schedule(out.schedule, out.assignment, w);
    for (const Violation& v : report.violations)
      MESSAGE("violation [", v.kind, "] ", v.detail);
    CHECK(report.ok());
    // the floor-based audits are guaranteed for this pipeline; the schedule-
    // side envelopes are tripwires that setup-heavy instances may trip (the
    // per-circuit setup cost exceeds the per-pair floor charge), so only
    // their presence is asserted here
    CHECK(out.audit.find("global_lb")->pass);
    CHECK(out.audit.find("assign_prefix")->pass);
    for (const char* name : {"sched_prefix", "prefix_chain", "worst_case_ratio",
                             "concentration_ratio"})
      CHECK(out.audit.find(name) != nullptr);
  }
}

TEST_CASE("[scheduler] run and run_eps police the fabric mode") {
  const Workload w = testutil::random_instance(1, 4, 2, 3, 1.0);
  CHECK_THROWS_AS(run_eps(w), ConfigError);
  const Workload p = testutil::random_instance(1, 4, 2, 3, 0.0, FabricMode::EPS);
  CHECK_THROWS_AS(run(p), ConfigError);
  const SchedulerOutput out = run_eps(p);
  CHECK(out.audit.all_pass());
  CHECK(verify_schedule(out.schedule, out.assignment, p).ok());
}

TEST_CASE("[scheduler] identical inputs give identical schedules") {
  const Workload w = testutil::random_instance(17, 5, 3, 12, 1.5);
  const SchedulerOutput a = run(w);
  const SchedulerOutput b = run(w);
  REQUIRE(a.schedule.events.size() == b.schedule.events.size());
  for (std::size_t i = 0; i < a.schedule.events.size(); ++i) {
    const CircuitEvent& x = a.schedule.events[i];
    const CircuitEvent& y = b.schedule.events[i];
    CHECK(x.coflow_id == y.coflow_id);
    CHECK(x.core == y.core);
    CHECK(x.ingress == y.ingress);
    CHECK(x.egress == y.egress);
    CHECK(x.establish == y.establish);
    CHECK(x.start == y.start);
    CHECK(x.finish == y.finish);
    CHECK(x.size == y.size);
  }
  CHECK(a.order == b.order);
}

}  // TEST_SUITE
