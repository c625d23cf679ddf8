#include "coflowsim/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace coflowsim {

double core_lower_bound(const DemandMatrix& d, double rate, double delta) {
  if (d.zero()) throw ZeroDemandError("core lower bound of an all-zero demand matrix");
  if (!(rate > 0.0)) throw ConfigError("core lower bound needs a positive rate");
  if (!(delta >= 0.0)) throw ConfigError("core lower bound needs nonnegative delta");
  const PortLoads pl = port_loads(d);
  double best = 0.0;
  for (int p = 0; p < d.ports(); ++p) {
    best = std::max(best, pl.ingress_load[p] / rate + pl.ingress_flows[p] * delta);
    best = std::max(best, pl.egress_load[p] / rate + pl.egress_flows[p] * delta);
  }
  return best;
}

double coflow_lower_bound(const DemandMatrix& d, const NetworkConfig& config) {
  if (d.zero()) throw ZeroDemandError("coflow lower bound of an all-zero demand matrix");
  config.validate();
  const double pooled = max_port_load(d) / config.total_rate();
  return config.mode == FabricMode::OCS ? config.delta + pooled : pooled;
}

double relaxed_lower_bound_floor(const DemandMatrix& d, const NetworkConfig& config,
                                 double psi) {
  if (d.zero()) throw ZeroDemandError("relaxed lower bound of an all-zero demand matrix");
  if (!(psi >= 1.0)) throw ConfigError("psi must be at least 1");
  config.validate();
  return (max_port_load(d) / config.max_rate() + max_port_flows(d) * config.delta) / psi;
}

double workload_psi(const Workload& w) {
  int worst = w.config().cores();
  for (const CoflowSpec& c : w.coflows()) worst = std::max(worst, max_port_flows(c.demand));
  return static_cast<double>(worst);
}

double weight_concentration(std::span<const double> weights) {
  if (weights.empty()) throw ConfigError("weight concentration of an empty weight vector");
  double sum = 0.0, sum_sq = 0.0;
  for (double v : weights) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("weight concentration needs positive finite weights");
    sum += v;
    sum_sq += v * v;
  }
  return static_cast<double>(weights.size()) * sum_sq / (sum * sum);
}

namespace {

void check_order(const Workload& w, std::span<const int> order) {
  if (static_cast<int>(order.size()) != w.count())
    throw DimensionMismatchError("execution order length must match coflow count");
  std::vector<bool> seen(static_cast<std::size_t>(w.count()), false);
  for (int m : order) {
    if (m < 0 || m >= w.count() || seen[static_cast<std::size_t>(m)])
      throw DimensionMismatchError("execution order is not a permutation of the coflows");
    seen[static_cast<std::size_t>(m)] = true;
  }
}

}  // namespace

PrefixAggregates prefix_aggregates(const Workload& w, std::span<const int> order,
                                   const FlowAssignment& assignment) {
  check_order(w, order);
  assignment.validate_against(w);

  const NetworkConfig& cfg = w.config();
  const int cores = cfg.cores();
  PrefixAggregates out;
  out.max_load.reserve(order.size());
  out.max_flows.reserve(order.size());
  out.core_floor.reserve(order.size());
  out.max_core_floor.reserve(order.size());

  DemandMatrix pooled(cfg.ports);
  std::vector<DemandMatrix> per_core(static_cast<std::size_t>(cores), DemandMatrix(cfg.ports));

  for (int m : order) {
    const DemandMatrix& demand = w.coflows()[m].demand;
    for (int i = 0; i < cfg.ports; ++i)
      for (int j = 0; j < cfg.ports; ++j)
        if (demand.at(i, j) > 0.0) pooled.add(i, j, demand.at(i, j));
    for (int k = 0; k < cores; ++k) {
      const DemandMatrix& slice = assignment.at(m, k);
      for (int i = 0; i < cfg.ports; ++i)
        for (int j = 0; j < cfg.ports; ++j)
          if (slice.at(i, j) > 0.0) per_core[static_cast<std::size_t>(k)].add(i, j, slice.at(i, j));
    }

    out.max_load.push_back(max_port_load(pooled));
    out.max_flows.push_back(max_port_flows(pooled));
    std::vector<double> floors(static_cast<std::size_t>(cores), 0.0);
    double worst = 0.0;
    for (int k = 0; k < cores; ++k) {
      const DemandMatrix& agg = per_core[static_cast<std::size_t>(k)];
      if (!agg.zero()) floors[static_cast<std::size_t>(k)] = core_lower_bound(agg, cfg.rates[k], cfg.delta);
      worst = std::max(worst, floors[static_cast<std::size_t>(k)]);
    }
    out.core_floor.push_back(std::move(floors));
    out.max_core_floor.push_back(worst);
  }
  return out;
}

const BoundCheck* BoundAudit::find(const std::string& name) const {
  for (const BoundCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool BoundAudit::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

BoundAudit audit_run(const Workload& w, std::span<const int> order,
                     const FlowAssignment& assignment, const Schedule& schedule) {
  check_order(w, order);
  const NetworkConfig& cfg = w.config();
  const int m_count = w.count();

  BoundAudit audit;
  audit.completion = completion_times(schedule, w);
  audit.coflow_floor.resize(static_cast<std::size_t>(m_count));
  for (int m = 0; m < m_count; ++m)
    audit.coflow_floor[static_cast<std::size_t>(m)] =
        coflow_lower_bound(w.coflows()[m].demand, cfg);

  const PrefixAggregates prefix = prefix_aggregates(w, order, assignment);
  audit.prefix_max_load = prefix.max_load;
  audit.prefix_max_flows = prefix.max_flows;
  audit.prefix_core_floor = prefix.max_core_floor;

  audit.psi = workload_psi(w);
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(m_count));
  for (const CoflowSpec& c : w.coflows()) weights.push_back(c.weight);
  audit.gamma_w = weight_concentration(weights);

  double w_min = weights[0], w_max = weights[0];
  for (double v : weights) {
    w_min = std::min(w_min, v);
    w_max = std::max(w_max, v);
  }

  for (int m = 0; m < m_count; ++m) {
    audit.total_weighted_cct += weights[static_cast<std::size_t>(m)] *
                                audit.completion[static_cast<std::size_t>(m)];
    audit.weighted_floor_sum += weights[static_cast<std::size_t>(m)] *
                                audit.coflow_floor[static_cast<std::size_t>(m)];
  }
  audit.theorem_bound_ratio = audit.total_weighted_cct / audit.weighted_floor_sum;

  const double r_max = cfg.max_rate();
  double global_slack = 0.0, assign_slack = 0.0, sched_slack = 0.0, chain_slack = 0.0;
  bool first = true;
  for (int pos = 0; pos < m_count; ++pos) {
    const int m = order[pos];
    const double t_m = audit.completion[static_cast<std::size_t>(m)];
    const double lb_slack = audit.coflow_floor[static_cast<std::size_t>(m)] - t_m;
    const double envelope = prefix.max_load[static_cast<std::size_t>(pos)] / r_max +
                            prefix.max_flows[static_cast<std::size_t>(pos)] * cfg.delta;
    const double a_slack = prefix.max_core_floor[static_cast<std::size_t>(pos)] - envelope;
    const double s_slack = t_m - 2.0 * prefix.max_core_floor[static_cast<std::size_t>(pos)];
    const double c_slack = t_m - 2.0 * envelope;
    if (first) {
      global_slack = lb_slack;
      assign_slack = a_slack;
      sched_slack = s_slack;
      chain_slack = c_slack;
      first = false;
    } else {
      global_slack = std::max(global_slack, lb_slack);
      assign_slack = std::max(assign_slack, a_slack);
      sched_slack = std::max(sched_slack, s_slack);
      chain_slack = std::max(chain_slack, c_slack);
    }
  }
  audit.assign_prefix_max_slack = assign_slack;
  audit.sched_prefix_max_slack = sched_slack;

  // In EPS mode delta is 0, so flow counts never enter a floor and the
  // aggregate factor collapses to the core count.
  const double factor = cfg.mode == FabricMode::OCS ? audit.psi
                                                    : static_cast<double>(cfg.cores());
  const double worst_case_rhs = 2.0 * m_count * (w_max / w_min) * factor *
                                audit.weighted_floor_sum;
  const double concentration_rhs = 2.0 * factor * audit.gamma_w * audit.weighted_floor_sum;

  auto push = [&audit](std::string name, double slack) {
    audit.checks.push_back({std::move(name), slack <= kTimeTol, slack});
  };
  push("global_lb", global_slack);
  push("assign_prefix", assign_slack);
  push("sched_prefix", sched_slack);
  push("prefix_chain", chain_slack);
  push("worst_case_ratio", audit.total_weighted_cct - worst_case_rhs);
  push("concentration_ratio", audit.total_weighted_cct - concentration_rhs);
  return audit;
}

}  // namespace coflowsim
