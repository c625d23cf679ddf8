#include "coflowsim/baselines.hpp"

#include "coflowsim/rng.hpp"
#include "coflowsim/scheduler_detail.hpp"

namespace coflowsim {

std::string to_string(BaselineKind kind) {
  return kind == BaselineKind::LoadOnly ? "load-only" : "random";
}

AssignmentPlan assign_load_only(const Workload& w, std::span<const int> order) {
  return detail::assign_greedy(w, order, /*charge_setup=*/false);
}

AssignmentPlan assign_random(const Workload& w, std::span<const int> order,
                             std::uint64_t seed) {
  const NetworkConfig& cfg = w.config();
  const std::vector<FlowRef> flows = priority_flows(w, order);
  SplitMix64 rng(seed);

  AssignmentPlan plan;
  plan.matrices = FlowAssignment(w.count(), cfg.cores(), cfg.ports);
  plan.flow_core.reserve(flows.size());
  for (const FlowRef& f : flows) {
    const int k = rng.pick_weighted(cfg.rates);
    plan.matrices.at(f.coflow, k).add(f.ingress, f.egress, f.size);
    plan.flow_core.push_back(k);
  }
  return plan;
}

SchedulerOutput run_baseline(BaselineKind kind, const Workload& w,
                             std::optional<std::uint64_t> seed) {
  if (kind == BaselineKind::LoadOnly)
    return detail::run_pipeline(w, [](const Workload& wl, std::span<const int> order) {
      return assign_load_only(wl, order);
    });
  if (!seed.has_value())
    throw ConfigError("the random-assignment baseline needs a seed");
  return detail::run_pipeline(
      w, [s = *seed](const Workload& wl, std::span<const int> order) {
        return assign_random(wl, order, s);
      });
}

}  // namespace coflowsim
