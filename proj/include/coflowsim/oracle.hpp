#pragma once

#include <vector>

#include "coflowsim/scheduler.hpp"

namespace coflowsim {

// Flows of a workload in canonical enumeration order: coflows in workload
// order, entries by (ingress, egress). The oracle's witness indexes into this.
std::vector<FlowRef> canonical_flows(const Workload& w);

struct OracleResult {
  double best_total = 0.0;                          // min weighted completion sum
  std::vector<int> witness_core;                    // per canonical flow
  std::vector<std::vector<int>> witness_core_order; // per core: canonical flow
                                                    // indices in service order
  std::vector<double> best_completion;              // per coflow, original order
  double weighted_floor_sum = 0.0;                  // sum of weight * floor
};

// Exhaustive search over every whole-flow core assignment and every per-core
// service order, scheduling each candidate with a from-scratch simulator of
// the greedy list-scheduling semantics (written independently of
// schedule_core, so the two implementations police each other). Deterministic:
// assignments enumerate odometer-style, orders lexicographically, and the
// first minimum encountered wins. The returned witness, replayed through
// schedule_core, reproduces best_total exactly.
// Throws InstanceTooLargeError beyond max_flows total flows or max_cores
// cores — the search is factorial and the caps are the point.
OracleResult best_list_schedule(const Workload& w, int max_flows = 6, int max_cores = 3);

}  // namespace coflowsim
