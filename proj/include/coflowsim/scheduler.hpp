#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coflowsim/bounds.hpp"
#include "coflowsim/model.hpp"
#include "coflowsim/verify.hpp"

namespace coflowsim {

// One flow, pinned to its place in the global service-priority order:
// coflows in execution order, and within a coflow larger flows first,
// ties broken by (ingress, egress).
struct FlowRef {
  std::int64_t coflow_id = 0;
  int coflow = 0;  // original workload index
  int ingress = 0;
  int egress = 0;
  double size = 0.0;
};

// Flows of `order`'s coflows flattened into global priority order.
std::vector<FlowRef> priority_flows(const Workload& w, std::span<const int> order);

// Coflows sorted by weight / pooled-fabric floor, largest first; ties keep
// workload order. Returns original indices in execution order.
std::vector<int> order_coflows(const Workload& w);

// An assignment plus every flow's core, still in priority order.
struct AssignmentPlan {
  FlowAssignment matrices;
  std::vector<int> flow_core;  // parallel to priority_flows(w, order)
};

// Greedy min-floor assignment: walk flows in priority order and put each one,
// whole, on the core whose completion-time floor grows the least (ties to the
// lowest core index). The floor charges both load and per-flow setup delay.
AssignmentPlan assign_flows(const Workload& w, std::span<const int> order);

// Non-preemptive priority list scheduler for one core: flows are placed one
// at a time in list order, each at the earliest time a window of
// delta + size / rate is clear on both of its ports. A flow's start time
// therefore depends only on the flows ahead of it; flows behind it may fill
// leftover gaps but can never delay it. Establishing at t means transmitting
// over [t + delta, t + delta + size / rate).
std::vector<CircuitEvent> schedule_core(std::span<const FlowRef> flows, int core,
                                        double rate, double delta);

struct SchedulerOutput {
  std::vector<int> order;  // execution order (original coflow indices)
  FlowAssignment assignment;
  Schedule schedule;
  BoundAudit audit;
};

// Full pipeline on an OCS fabric: order, assign, schedule each core, audit.
// Throws ConfigError if the workload's fabric is not OCS.
SchedulerOutput run(const Workload& w);

// Same pipeline on an EPS fabric (delta = 0, floors drop the delay terms).
// Throws ConfigError if the workload's fabric is not EPS.
SchedulerOutput run_eps(const Workload& w);

}  // namespace coflowsim
