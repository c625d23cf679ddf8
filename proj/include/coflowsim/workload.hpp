#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "coflowsim/model.hpp"

namespace coflowsim {

// Telemetry shape many fabrics export: bytes are known per receiver, with the
// contributing senders listed but their exact per-sender split lost.
struct ReceiverRecord {
  std::int64_t coflow_id = 0;
  int receiver = 0;          // egress port, 0-based
  double bytes = 0.0;        // total into that receiver
  std::vector<int> senders;  // ingress ports, 0-based
};

// Rebuild per-(sender, receiver) demands from receiver records by splitting
// each record's bytes across its senders with seeded multiplicative noise:
// sender s gets bytes * u_s / sum(u), u_s uniform in [1 - eps, 1 + eps].
// eps = 0 gives an even split. Coflows come out in first-appearance order
// with weight 1 (weights are attached downstream).
std::vector<CoflowSpec> expand_receivers(std::span<const ReceiverRecord> records,
                                         int ports, double perturbation,
                                         std::uint64_t seed);

// Receiver records from JSON: {"records": [{"coflow_id": .., "receiver": ..,
// "bytes": .., "senders": [..]}, ...]} with 1-based ports.
std::vector<ReceiverRecord> load_receivers(const std::filesystem::path& path);

// Trace CSV: header "coflow_id,weight,src,dst,size", 1-based ports, one flow
// per row. Repeated (coflow, src, dst) rows accumulate. A coflow's weight
// must agree across its rows. Coflows keep first-appearance order.
Workload load_trace(std::istream& in, const NetworkConfig& config);
Workload load_trace(const std::filesystem::path& path, const NetworkConfig& config);

// Inverse of load_trace, with deterministic formatting and row order
// (workload order, then ingress, then egress).
void write_trace(std::ostream& out, const Workload& w);

// Synthetic workload knobs. max_flows <= 0 means "2N, capped at N^2".
struct SynthSpec {
  int coflows = 100;
  int min_flows = 1;
  int max_flows = 0;
  double pareto_shape = 1.6;
  double pareto_scale = 1.0;
};

// Heavy-tailed random instances: per coflow, a uniform number of distinct
// (ingress, egress) pairs, each carrying a Pareto-distributed size. Coflow
// ids are 1..M, weights 1.
Workload synth_workload(const SynthSpec& spec, const NetworkConfig& config,
                        std::uint64_t seed);

struct WeightModel {
  enum class Kind { Constant, Uniform, Normal };
  Kind kind = Kind::Constant;
  double a = 1.0;  // constant value / uniform lo / normal mean
  double b = 0.0;  // uniform hi / normal stddev
};

std::string to_string(WeightModel::Kind kind);
WeightModel::Kind weight_kind_from_string(const std::string& s);

// Seeded weight draws. Normal samples are clamped below at 1e-6 * mean so a
// tail draw can never produce a nonpositive weight.
std::vector<double> sample_weights(const WeightModel& model, int count,
                                   std::uint64_t seed);

}  // namespace coflowsim
