#include "coflowsim/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coflowsim/bounds.hpp"

namespace coflowsim {

std::vector<FlowRef> canonical_flows(const Workload& w) {
  std::vector<FlowRef> flows;
  for (int m = 0; m < w.count(); ++m) {
    const CoflowSpec& c = w.coflows()[m];
    for (int i = 0; i < c.demand.ports(); ++i)
      for (int j = 0; j < c.demand.ports(); ++j)
        if (c.demand.at(i, j) > 0.0) flows.push_back({c.id, m, i, j, c.demand.at(i, j)});
  }
  return flows;
}

namespace {

// Independent realization of the earliest-fit list-scheduling semantics:
// brute-force candidate starts (zero and every teardown on a shared port)
// instead of schedule_core's sorted interval walk. The arithmetic mirrors
// schedule_core exactly — width = delta + size/rate for the fit test,
// finish = (t + delta) + size/rate for the stored interval — so replays of
// the same list are bit-identical. Returns per-coflow completion times on
// this core (0 where a coflow is absent).
std::vector<double> replay_core(const std::vector<FlowRef>& list, double rate,
                                double delta, int ports, int coflows) {
  (void)ports;
  struct Placed {
    int ingress, egress;
    double establish, finish;
  };
  std::vector<Placed> placed;
  placed.reserve(list.size());
  std::vector<double> completion(static_cast<std::size_t>(coflows), 0.0);
  for (const FlowRef& fr : list) {
    const double width = delta + fr.size / rate;
    std::vector<double> candidates{0.0};
    for (const Placed& p : placed)
      if (p.ingress == fr.ingress || p.egress == fr.egress) candidates.push_back(p.finish);
    std::sort(candidates.begin(), candidates.end());
    double chosen = candidates.back();
    for (double t : candidates) {
      bool clear = true;
      for (const Placed& p : placed) {
        if (p.ingress != fr.ingress && p.egress != fr.egress) continue;
        if (t < p.finish && p.establish < t + width) {
          clear = false;
          break;
        }
      }
      if (clear) {
        chosen = t;
        break;
      }
    }
    const double finish = chosen + delta + fr.size / rate;
    placed.push_back({fr.ingress, fr.egress, chosen, finish});
    completion[static_cast<std::size_t>(fr.coflow)] =
        std::max(completion[static_cast<std::size_t>(fr.coflow)], finish);
  }
  return completion;
}

}  // namespace

OracleResult best_list_schedule(const Workload& w, int max_flows, int max_cores) {
  const NetworkConfig& cfg = w.config();
  const std::vector<FlowRef> flows = canonical_flows(w);
  const int f_count = static_cast<int>(flows.size());
  const int cores = cfg.cores();
  if (f_count > max_flows)
    throw InstanceTooLargeError("oracle refuses " + std::to_string(f_count) +
                                " flows (cap " + std::to_string(max_flows) +
                                "); the search is factorial in flows");
  if (cores > max_cores)
    throw InstanceTooLargeError("oracle refuses " + std::to_string(cores) +
                                " cores (cap " + std::to_string(max_cores) + ")");

  OracleResult result;
  result.best_total = std::numeric_limits<double>::infinity();
  for (const CoflowSpec& c : w.coflows())
    result.weighted_floor_sum += c.weight * coflow_lower_bound(c.demand, cfg);

  // The completion of a candidate depends only on each core's own service
  // order, so enumerate per-core permutations instead of full global orders:
  // same search space, factorially fewer simulations.
  std::vector<int> assign(static_cast<std::size_t>(f_count), 0);
  while (true) {
    // Per-core flow lists under this assignment, canonical order.
    std::vector<std::vector<int>> core_flows(static_cast<std::size_t>(cores));
    for (int f = 0; f < f_count; ++f)
      core_flows[static_cast<std::size_t>(assign[static_cast<std::size_t>(f)])].push_back(f);

    // All service orders per core, each reduced to per-coflow completions.
    std::vector<std::vector<std::vector<int>>> orders(static_cast<std::size_t>(cores));
    std::vector<std::vector<std::vector<double>>> completions(static_cast<std::size_t>(cores));
    for (int k = 0; k < cores; ++k) {
      std::vector<int> perm = core_flows[static_cast<std::size_t>(k)];
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<FlowRef> list;
        list.reserve(perm.size());
        for (int f : perm) list.push_back(flows[static_cast<std::size_t>(f)]);
        completions[static_cast<std::size_t>(k)].push_back(
            replay_core(list, cfg.rates[static_cast<std::size_t>(k)], cfg.delta,
                        cfg.ports, w.count()));
        orders[static_cast<std::size_t>(k)].push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // Cartesian product of per-core order choices, core 0 slowest.
    std::vector<std::size_t> pick(static_cast<std::size_t>(cores), 0);
    while (true) {
      double total = 0.0;
      for (int m = 0; m < w.count(); ++m) {
        double t_m = 0.0;
        for (int k = 0; k < cores; ++k)
          t_m = std::max(t_m, completions[static_cast<std::size_t>(k)]
                                         [pick[static_cast<std::size_t>(k)]]
                                         [static_cast<std::size_t>(m)]);
        total += w.coflows()[m].weight * t_m;
      }
      if (total < result.best_total) {
        result.best_total = total;
        result.witness_core = assign;
        result.witness_core_order.assign(static_cast<std::size_t>(cores), {});
        result.best_completion.assign(static_cast<std::size_t>(w.count()), 0.0);
        for (int k = 0; k < cores; ++k) {
          result.witness_core_order[static_cast<std::size_t>(k)] =
              orders[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]];
          for (int m = 0; m < w.count(); ++m)
            result.best_completion[static_cast<std::size_t>(m)] = std::max(
                result.best_completion[static_cast<std::size_t>(m)],
                completions[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]]
                           [static_cast<std::size_t>(m)]);
        }
      }
      int k = cores - 1;
      while (k >= 0 && ++pick[static_cast<std::size_t>(k)] ==
                           completions[static_cast<std::size_t>(k)].size()) {
        pick[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }

    int f = f_count - 1;
    while (f >= 0 && ++assign[static_cast<std::size_t>(f)] == cores) {
      assign[static_cast<std::size_t>(f)] = 0;
      --f;
    }
    if (f < 0) break;
  }
  return result;
}

}  // namespace coflowsim
