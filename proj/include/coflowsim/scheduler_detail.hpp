#pragma once

#include <functional>
#include <span>

#include "coflowsim/scheduler.hpp"

// Shared plumbing between the main scheduler and the ablation assigners.

namespace coflowsim::detail {

using Assigner = std::function<AssignmentPlan(const Workload&, std::span<const int>)>;

// Greedy argmin-floor assignment. charge_setup selects the floor the argmin
// minimizes: true charges load/rate + flows*delta per port, false charges
// load/rate only. With delta = 0 the two floors are the same arithmetic
// expression, so decisions (and everything downstream) match bit for bit.
AssignmentPlan assign_greedy(const Workload& w, std::span<const int> order,
                             bool charge_setup);

// Partition priority-ordered flows by assigned core and list-schedule each.
// Events come out core-major, establishment order within a core.
Schedule schedule_all_cores(const Workload& w, std::span<const int> order,
                            const AssignmentPlan& plan);

// order -> assign -> schedule -> audit.
SchedulerOutput run_pipeline(const Workload& w, const Assigner& assign);

}  // namespace coflowsim::detail
