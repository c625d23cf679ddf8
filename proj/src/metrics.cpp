#include "coflowsim/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace coflowsim {

double total_weighted_cct(std::span<const double> completion,
                          std::span<const double> weights) {
  if (completion.size() != weights.size())
    throw DimensionMismatchError("completion and weight vectors differ in length");
  double total = 0.0;
  for (std::size_t m = 0; m < completion.size(); ++m) total += weights[m] * completion[m];
  return total;
}

double total_weighted_cct(const Schedule& s, const Workload& w) {
  const std::vector<double> completion = completion_times(s, w);
  double total = 0.0;
  for (int m = 0; m < w.count(); ++m)
    total += w.coflows()[m].weight * completion[static_cast<std::size_t>(m)];
  return total;
}

double norm_w(double candidate_total, double reference_total) {
  if (!(reference_total > 0.0))
    throw ConfigError("norm_w needs a positive reference total");
  return candidate_total / reference_total;
}

double tail_cct(std::span<const double> completion, double percentile) {
  if (completion.empty()) throw ConfigError("tail percentile of no completions");
  if (!(percentile > 0.0) || !(percentile < 100.0))
    throw ConfigError("percentile must lie in (0, 100)");
  std::vector<double> sorted(completion.begin(), completion.end());
  std::sort(sorted.begin(), sorted.end());
  const auto count = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * count));
  if (rank == 0) rank = 1;
  return sorted[rank - 1];
}

}  // namespace coflowsim
