#pragma once

#include <span>
#include <string>
#include <vector>

#include "coflowsim/model.hpp"

namespace coflowsim {

// Completion-time floor for demand `d` run alone on one core with port rate
// `rate`: max over ports of load/rate + flows*delta (every flow through a
// port pays one reconfiguration, and the port is serial).
// Throws ZeroDemandError on an all-zero matrix — "no demand" has no floor,
// and silently returning 0 has bitten enough schedulers before.
double core_lower_bound(const DemandMatrix& d, double rate, double delta);

// Mode-aware floor for a coflow on the whole fabric, all cores pooled:
// OCS: delta + max_port_load / total_rate;  EPS: max_port_load / total_rate.
double coflow_lower_bound(const DemandMatrix& d, const NetworkConfig& config);

// Coarser floor used by the aggregate ratio audits:
// (max_port_load / max_rate + max_port_flows * delta) / psi
// where psi = max(cores, largest per-coflow max_port_flows in the workload).
double relaxed_lower_bound_floor(const DemandMatrix& d, const NetworkConfig& config,
                                 double psi);

// psi for a workload: max(K, max over coflows of max_port_flows(demand)).
double workload_psi(const Workload& w);

// Weight concentration M * sum(w^2) / sum(w)^2; 1 for equal weights, M when
// one coflow carries everything. Throws ConfigError on empty/nonpositive.
double weight_concentration(std::span<const double> weights);

// Running aggregates over prefixes of the execution order. Entry p describes
// the first p+1 coflows of `order`:
//   max_load[p]      largest port load of the summed demand so far
//   max_flows[p]     largest per-port positive-entry count of that sum
//   core_floor[p][k] core_lower_bound of core k's summed slice (0 if empty)
//   max_core_floor[p] max over cores of the above
struct PrefixAggregates {
  std::vector<double> max_load;
  std::vector<int> max_flows;
  std::vector<std::vector<double>> core_floor;
  std::vector<double> max_core_floor;
};

PrefixAggregates prefix_aggregates(const Workload& w, std::span<const int> order,
                                   const FlowAssignment& assignment);

// One audited inequality. slack = lhs - rhs; pass iff slack <= kTimeTol.
struct BoundCheck {
  std::string name;
  bool pass = false;
  double slack = 0.0;
};

// Everything the bound audits derive from a finished run. Check names:
//   global_lb           every completion >= its coflow's pooled-fabric floor
//   assign_prefix       per-core prefix floors stay under the aggregate
//                       max_load/max_rate + max_flows*delta envelope
//                       (guaranteed only for the greedy min-floor assigner)
//   sched_prefix        each ordered coflow finishes within 2x the worst
//                       per-core prefix floor
//   prefix_chain        ... and within 2x the aggregate envelope above
//   worst_case_ratio    weighted total <= 2*M*(w_max/w_min)*factor * floor sum
//   concentration_ratio weighted total <= 2*factor*concentration * floor sum
// where factor is psi in OCS mode and the core count in EPS mode.
struct BoundAudit {
  std::vector<double> coflow_floor;     // per original coflow index
  std::vector<double> completion;      // per original coflow index
  std::vector<double> prefix_max_load;
  std::vector<int> prefix_max_flows;
  std::vector<double> prefix_core_floor;  // max over cores, per prefix
  double psi = 0.0;
  double gamma_w = 0.0;
  double total_weighted_cct = 0.0;
  double weighted_floor_sum = 0.0;
  double theorem_bound_ratio = 0.0;  // total_weighted_cct / weighted_floor_sum
  double assign_prefix_max_slack = 0.0;
  double sched_prefix_max_slack = 0.0;
  std::vector<BoundCheck> checks;

  const BoundCheck* find(const std::string& name) const;
  bool all_pass() const;
};

BoundAudit audit_run(const Workload& w, std::span<const int> order,
                     const FlowAssignment& assignment, const Schedule& schedule);

}  // namespace coflowsim
