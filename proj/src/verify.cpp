#include "coflowsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace coflowsim {

namespace {

std::string describe(const CircuitEvent& e) {
  std::ostringstream os;
  os << "coflow " << e.coflow_id << " core " << e.core + 1 << " (" << e.ingress + 1
     << " -> " << e.egress + 1 << ") establish " << e.establish << " finish " << e.finish;
  return os.str();
}

}  // namespace

VerifyReport verify_schedule(const Schedule& s, const FlowAssignment& assignment,
                             const Workload& w) {
  assignment.validate_against(w);  // shape errors are thrown, not reported

  const NetworkConfig& cfg = w.config();
  VerifyReport report;
  auto flag = [&report](std::string kind, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(detail)});
  };

  // Structural pass: keep only events that reference real cores/ports/coflows.
  std::vector<const CircuitEvent*> events;
  events.reserve(s.events.size());
  for (const CircuitEvent& e : s.events) {
    bool ok = true;
    if (e.core < 0 || e.core >= cfg.cores()) {
      flag("structure", "event references core " + std::to_string(e.core + 1) +
                            " of " + std::to_string(cfg.cores()));
      ok = false;
    }
    if (e.ingress < 0 || e.ingress >= cfg.ports || e.egress < 0 || e.egress >= cfg.ports) {
      flag("structure", "event references a port outside 1.." + std::to_string(cfg.ports));
      ok = false;
    }
    bool known = false;
    for (const CoflowSpec& c : w.coflows())
      if (c.id == e.coflow_id) known = true;
    if (!known) {
      flag("structure", "event references unknown coflow id " + std::to_string(e.coflow_id));
      ok = false;
    }
    if (ok) events.push_back(&e);
  }

  // Coverage: each positive assigned entry <-> exactly one event of that size.
  std::map<std::tuple<int, int, int, int>, int> seen;  // (m, core, i, j) -> count
  for (const CircuitEvent* e : events) {
    const int m = w.index_of(e->coflow_id);
    const auto key = std::make_tuple(m, e->core, e->ingress, e->egress);
    if (++seen[key] > 1) {
      flag("coverage", "duplicate event for " + describe(*e));
      continue;
    }
    const double assigned = assignment.at(m, e->core).at(e->ingress, e->egress);
    if (assigned <= 0.0)
      flag("coverage", "event with no assigned demand: " + describe(*e));
    else if (std::abs(assigned - e->size) > kTimeTol)
      flag("coverage", "event size " + std::to_string(e->size) + " does not match assigned " +
                           std::to_string(assigned) + " for " + describe(*e));
  }
  for (int m = 0; m < w.count(); ++m)
    for (int k = 0; k < cfg.cores(); ++k) {
      const DemandMatrix& slice = assignment.at(m, k);
      for (int i = 0; i < cfg.ports; ++i)
        for (int j = 0; j < cfg.ports; ++j)
          if (slice.at(i, j) > 0.0 && !seen.count(std::make_tuple(m, k, i, j)))
            flag("coverage", "assigned flow has no event: coflow " +
                                 std::to_string(w.coflows()[m].id) + " core " +
                                 std::to_string(k + 1) + " (" + std::to_string(i + 1) +
                                 " -> " + std::to_string(j + 1) + ")");
    }

  // Timing arithmetic.
  for (const CircuitEvent* e : events) {
    if (e->establish < -kTimeTol)
      flag("timing", "negative establish time: " + describe(*e));
    if (std::abs(e->start - (e->establish + cfg.delta)) > kTimeTol)
      flag("timing", "start != establish + delta: " + describe(*e));
    if (std::abs(e->finish - (e->start + e->size / cfg.rates[static_cast<std::size_t>(e->core)])) > kTimeTol)
      flag("timing", "finish != start + size / rate: " + describe(*e));
  }

  // Per-(core, port) occupancy lists, establish-sorted. A circuit owns both
  // its ports for [establish, finish) — setup time included.
  struct Span {
    double establish, finish;
    const CircuitEvent* event;
  };
  std::map<std::pair<int, int>, std::vector<Span>> ingress_spans, egress_spans;
  for (const CircuitEvent* e : events) {
    ingress_spans[{e->core, e->ingress}].push_back({e->establish, e->finish, e});
    egress_spans[{e->core, e->egress}].push_back({e->establish, e->finish, e});
  }
  auto by_establish = [](const Span& a, const Span& b) { return a.establish < b.establish; };
  for (auto* side : {&ingress_spans, &egress_spans})
    for (auto& [port, spans] : *side) {
      std::sort(spans.begin(), spans.end(), by_establish);
      for (std::size_t i = 1; i < spans.size(); ++i)
        if (spans[i].establish < spans[i - 1].finish - kTimeTol)
          flag("port_exclusivity", "overlap between " + describe(*spans[i - 1].event) +
                                       " and " + describe(*spans[i].event));
    }

  // Greedy-earliest consistency: no circuit could have been established
  // strictly earlier given the circuits of equal-or-earlier establish time on
  // its two ports. Walk those spans in establish order and find the first
  // window wide enough for the event; it must be the window actually used.
  for (const CircuitEvent* e : events) {
    std::vector<Span> earlier;
    for (const auto* side : {&ingress_spans, &egress_spans}) {
      const auto it = side->find({e->core, side == &ingress_spans ? e->ingress : e->egress});
      if (it == side->end()) continue;
      for (const Span& span : it->second)
        if (span.event != e && span.establish <= e->establish + kTimeTol)
          earlier.push_back(span);
    }
    std::sort(earlier.begin(), earlier.end(), by_establish);
    const double width = e->finish - e->establish;
    double fit = 0.0;
    for (const Span& span : earlier) {
      if (span.establish >= fit + width) break;  // event fits before it
      fit = std::max(fit, span.finish);
    }
    if (fit < e->establish - kTimeTol)
      flag("work_conservation", "a window at time " + std::to_string(fit) +
                                    " was left idle on both ports before " + describe(*e));
  }

  return report;
}

}  // namespace coflowsim
