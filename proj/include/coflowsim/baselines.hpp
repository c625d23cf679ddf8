#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "coflowsim/scheduler.hpp"

namespace coflowsim {

// Ablation variants. Both keep the main pipeline's ordering and list
// scheduler and change only how flows pick a core:
//   LoadOnly   argmin of per-port load/rate, ignoring setup delay
//   Random     core k with probability rate_k / total rate, per flow
enum class BaselineKind { LoadOnly, Random };

std::string to_string(BaselineKind kind);

// Greedy argmin on load alone (no setup charge).
AssignmentPlan assign_load_only(const Workload& w, std::span<const int> order);

// Rate-proportional coin flip per flow; identical seeds give identical
// assignments on any platform.
AssignmentPlan assign_random(const Workload& w, std::span<const int> order,
                             std::uint64_t seed);

// Full pipeline with the chosen assigner. Random needs a seed; passing none
// throws ConfigError.
SchedulerOutput run_baseline(BaselineKind kind, const Workload& w,
                             std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace coflowsim
