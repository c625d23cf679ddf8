#pragma once

#include <vector>

#include "coflowsim/model.hpp"
#include "coflowsim/rng.hpp"
#include "coflowsim/workload.hpp"

namespace testutil {

using namespace coflowsim;

inline NetworkConfig ocs(int ports, std::vector<double> rates, double delta) {
  NetworkConfig cfg;
  cfg.mode = FabricMode::OCS;
  cfg.ports = ports;
  cfg.rates = std::move(rates);
  cfg.delta = delta;
  return cfg;
}

inline NetworkConfig eps(int ports, std::vector<double> rates) {
  NetworkConfig cfg = ocs(ports, std::move(rates), 0.0);
  cfg.mode = FabricMode::EPS;
  return cfg;
}

inline CoflowSpec coflow(std::int64_t id, double weight,
                         const std::vector<std::vector<double>>& rows) {
  return {id, weight, DemandMatrix::from_rows(rows)};
}

// Small seeded instance for property tests: heterogeneous rates, heavy-tailed
// sizes, a weight model cycling with the seed.
inline Workload random_instance(std::uint64_t seed, int ports, int cores, int coflows,
                                double delta, FabricMode mode = FabricMode::OCS) {
  SplitMix64 rng(seed ^ 0xabcdef12345678ull);
  NetworkConfig cfg;
  cfg.mode = mode;
  cfg.ports = ports;
  for (int k = 0; k < cores; ++k)
    cfg.rates.push_back(static_cast<double>(rng.uniform_int(1, 40)));
  cfg.delta = mode == FabricMode::EPS ? 0.0 : delta;

  SynthSpec spec;
  spec.coflows = coflows;
  spec.min_flows = 1;
  spec.max_flows = std::min(2 * ports, 12);
  Workload base = synth_workload(spec, cfg, mix_seed(seed, 1));

  WeightModel model;
  switch (seed % 3) {
    case 0: model = {WeightModel::Kind::Constant, 1.0, 0.0}; break;
    case 1: model = {WeightModel::Kind::Uniform, 0.5, 4.0}; break;
    default: model = {WeightModel::Kind::Normal, 10.0, 2.0}; break;
  }
  return with_weights(base, sample_weights(model, base.count(), mix_seed(seed, 2)));
}

}  // namespace testutil
