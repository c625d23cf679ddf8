#pragma once

#include <string>
#include <vector>

#include "coflowsim/model.hpp"

namespace coflowsim {

struct Violation {
  std::string kind;    // stable machine-readable tag
  std::string detail;  // human-readable description
};

struct VerifyReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Independent feasibility check of a finished schedule. Verifies:
//   coverage          every positive assigned entry maps to exactly one
//                     event of matching size, and no stray events exist
//   timing            establish >= 0, start = establish + delta,
//                     finish = start + size / core rate
//   port_exclusivity  per core, a port carries one circuit at a time
//                     (occupancy is [establish, finish): setup holds the port)
//   work_conservation no circuit could have been established strictly
//                     earlier given the circuits of equal-or-earlier
//                     establish time on its two ports
// All comparisons use kTimeTol. Shape problems (assignment not matching the
// workload, wrong matrix sizes) throw DimensionMismatchError instead of
// reporting violations.
VerifyReport verify_schedule(const Schedule& s, const FlowAssignment& assignment,
                             const Workload& w);

}  // namespace coflowsim
