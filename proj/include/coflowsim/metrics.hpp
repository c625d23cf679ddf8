#pragma once

#include <span>
#include <vector>

#include "coflowsim/model.hpp"

namespace coflowsim {

// Sum of weight * completion over coflows. The schedule overload derives
// completions first and throws MissingCoflowError if any coflow lacks events.
double total_weighted_cct(std::span<const double> completion,
                          std::span<const double> weights);
double total_weighted_cct(const Schedule& s, const Workload& w);

// Candidate's weighted total relative to the reference scheduler's. > 1 means
// the candidate is worse. Throws ConfigError on a nonpositive reference.
double norm_w(double candidate_total, double reference_total);

// Nearest-rank percentile of completion times: sorted value at index
// ceil(p/100 * count), 1-based. p must be in (0, 100); empty input throws.
double tail_cct(std::span<const double> completion, double percentile);

}  // namespace coflowsim
