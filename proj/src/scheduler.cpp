#include "coflowsim/scheduler.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coflowsim/scheduler_detail.hpp"

namespace coflowsim {

std::vector<FlowRef> priority_flows(const Workload& w, std::span<const int> order) {
  std::vector<FlowRef> flows;
  for (int m : order) {
    const CoflowSpec& c = w.coflows()[m];
    std::vector<FlowRef> mine;
    for (int i = 0; i < c.demand.ports(); ++i)
      for (int j = 0; j < c.demand.ports(); ++j)
        if (c.demand.at(i, j) > 0.0) mine.push_back({c.id, m, i, j, c.demand.at(i, j)});
    std::sort(mine.begin(), mine.end(), [](const FlowRef& a, const FlowRef& b) {
      if (a.size != b.size) return a.size > b.size;
      if (a.ingress != b.ingress) return a.ingress < b.ingress;
      return a.egress < b.egress;
    });
    flows.insert(flows.end(), mine.begin(), mine.end());
  }
  return flows;
}

std::vector<int> order_coflows(const Workload& w) {
  std::vector<double> score(static_cast<std::size_t>(w.count()));
  for (int m = 0; m < w.count(); ++m)
    score[static_cast<std::size_t>(m)] =
        w.coflows()[m].weight / coflow_lower_bound(w.coflows()[m].demand, w.config());
  std::vector<int> order(static_cast<std::size_t>(w.count()));
  std::iota(order.begin(), order.end(), 0);
  // stable: equal scores keep workload order
  std::stable_sort(order.begin(), order.end(), [&score](int a, int b) {
    return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)];
  });
  return order;
}

namespace detail {

AssignmentPlan assign_greedy(const Workload& w, std::span<const int> order,
                             bool charge_setup) {
  const NetworkConfig& cfg = w.config();
  const int cores = cfg.cores();
  const std::vector<FlowRef> flows = priority_flows(w, order);

  AssignmentPlan plan;
  plan.matrices = FlowAssignment(w.count(), cores, cfg.ports);
  plan.flow_core.reserve(flows.size());

  // Incremental per-core state. floor[k] is the running completion-time floor
  // of everything assigned to core k so far; adding a flow can only raise the
  // floors of its two ports, so the candidate value is a three-way max. The
  // setup term counts distinct port pairs carrying demand on the core, not
  // individual flows: stacking more traffic onto a pair the core already
  // serves adds transmission time but no new setup charge to the floor.
  struct CoreState {
    std::vector<double> in_load, out_load;
    std::vector<int> in_pairs, out_pairs;
    std::vector<char> pair_used;  // ports x ports occupancy
    double floor = 0.0;
  };
  std::vector<CoreState> state(static_cast<std::size_t>(cores));
  const std::size_t ports = static_cast<std::size_t>(cfg.ports);
  for (CoreState& cs : state) {
    cs.in_load.assign(ports, 0.0);
    cs.out_load.assign(ports, 0.0);
    cs.in_pairs.assign(ports, 0);
    cs.out_pairs.assign(ports, 0);
    cs.pair_used.assign(ports * ports, 0);
  }
  const double setup = charge_setup ? cfg.delta : 0.0;

  for (const FlowRef& f : flows) {
    const std::size_t in = static_cast<std::size_t>(f.ingress);
    const std::size_t out = static_cast<std::size_t>(f.egress);
    int best_k = 0;
    double best_floor = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cores; ++k) {
      const CoreState& cs = state[static_cast<std::size_t>(k)];
      const double rate = cfg.rates[static_cast<std::size_t>(k)];
      const int fresh = cs.pair_used[in * ports + out] ? 0 : 1;
      const double in_floor =
          (cs.in_load[in] + f.size) / rate + (cs.in_pairs[in] + fresh) * setup;
      const double out_floor =
          (cs.out_load[out] + f.size) / rate + (cs.out_pairs[out] + fresh) * setup;
      const double candidate = std::max({cs.floor, in_floor, out_floor});
      if (candidate < best_floor) {  // strict: ties stay on the lowest core
        best_floor = candidate;
        best_k = k;
      }
    }
    CoreState& cs = state[static_cast<std::size_t>(best_k)];
    cs.in_load[in] += f.size;
    cs.out_load[out] += f.size;
    if (!cs.pair_used[in * ports + out]) {
      cs.pair_used[in * ports + out] = 1;
      ++cs.in_pairs[in];
      ++cs.out_pairs[out];
    }
    cs.floor = best_floor;
    plan.matrices.at(f.coflow, best_k).add(f.ingress, f.egress, f.size);
    plan.flow_core.push_back(best_k);
  }
  return plan;
}

Schedule schedule_all_cores(const Workload& w, std::span<const int> order,
                            const AssignmentPlan& plan) {
  const NetworkConfig& cfg = w.config();
  const std::vector<FlowRef> flows = priority_flows(w, order);
  Schedule schedule;
  for (int k = 0; k < cfg.cores(); ++k) {
    std::vector<FlowRef> mine;
    for (std::size_t f = 0; f < flows.size(); ++f)
      if (plan.flow_core[f] == k) mine.push_back(flows[f]);
    std::vector<CircuitEvent> events =
        schedule_core(mine, k, cfg.rates[static_cast<std::size_t>(k)], cfg.delta);
    schedule.events.insert(schedule.events.end(), events.begin(), events.end());
  }
  return schedule;
}

SchedulerOutput run_pipeline(const Workload& w, const Assigner& assign) {
  SchedulerOutput out;
  out.order = order_coflows(w);
  AssignmentPlan plan = assign(w, out.order);
  out.schedule = schedule_all_cores(w, out.order, plan);
  out.assignment = std::move(plan.matrices);
  out.audit = audit_run(w, out.order, out.assignment, out.schedule);
  return out;
}

}  // namespace detail

AssignmentPlan assign_flows(const Workload& w, std::span<const int> order) {
  return detail::assign_greedy(w, order, /*charge_setup=*/true);
}

namespace {

using BusySpan = std::pair<double, double>;  // [establish, finish)

void insert_span(std::vector<BusySpan>& spans, BusySpan s) {
  spans.insert(std::upper_bound(spans.begin(), spans.end(), s), s);
}

}  // namespace

std::vector<CircuitEvent> schedule_core(std::span<const FlowRef> flows, int core,
                                        double rate, double delta) {
  std::vector<CircuitEvent> events;
  events.reserve(flows.size());
  if (flows.empty()) return events;

  int ports = 0;
  for (const FlowRef& f : flows) ports = std::max({ports, f.ingress + 1, f.egress + 1});
  std::vector<std::vector<BusySpan>> in_busy(static_cast<std::size_t>(ports));
  std::vector<std::vector<BusySpan>> out_busy(static_cast<std::size_t>(ports));

  // Priority placement: each flow takes the earliest window wide enough for
  // setup plus transmission on both of its ports. A flow's start is decided
  // entirely by the flows ahead of it in the list; anything behind it can
  // only fill the leftover gaps, never push it back.
  for (const FlowRef& f : flows) {
    const double width = delta + f.size / rate;
    const std::vector<BusySpan>& ins = in_busy[static_cast<std::size_t>(f.ingress)];
    const std::vector<BusySpan>& outs = out_busy[static_cast<std::size_t>(f.egress)];
    double t = 0.0;
    std::size_t a = 0, b = 0;
    while (a < ins.size() || b < outs.size()) {
      const bool take_a =
          b == outs.size() || (a < ins.size() && ins[a].first <= outs[b].first);
      const BusySpan& s = take_a ? ins[a++] : outs[b++];
      if (s.first >= t + width) break;  // the window closes before this span
      t = std::max(t, s.second);
    }
    const double start = t + delta;
    const double finish = start + f.size / rate;
    events.push_back({f.coflow_id, core, f.ingress, f.egress, t, start, finish, f.size});
    insert_span(in_busy[static_cast<std::size_t>(f.ingress)], {t, finish});
    insert_span(out_busy[static_cast<std::size_t>(f.egress)], {t, finish});
  }
  return events;
}

SchedulerOutput run(const Workload& w) {
  if (w.config().mode != FabricMode::OCS)
    throw ConfigError("run() drives OCS fabrics; use run_eps() for EPS");
  return detail::run_pipeline(w, [](const Workload& wl, std::span<const int> order) {
    return assign_flows(wl, order);
  });
}

SchedulerOutput run_eps(const Workload& w) {
  if (w.config().mode != FabricMode::EPS)
    throw ConfigError("run_eps() drives EPS fabrics; use run() for OCS");
  return detail::run_pipeline(w, [](const Workload& wl, std::span<const int> order) {
    return assign_flows(wl, order);
  });
}

}  // namespace coflowsim
