#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coflowsim/error.hpp"

namespace coflowsim {

// Absolute tolerance for every floating-point feasibility / bound comparison.
// Event times themselves are compared exactly (they are produced by exact
// arithmetic on the same values); the tolerance is for cross-checks.
inline constexpr double kTimeTol = 1e-9;

enum class FabricMode { OCS, EPS };

std::string to_string(FabricMode mode);
FabricMode fabric_mode_from_string(const std::string& s);

// Square nonnegative demand matrix over the fabric's N ingress / N egress
// ports. Entry (i, j) is the number of bytes coflow traffic wants to move
// from ingress i to egress j. Indices are 0-based internally; file formats
// are 1-based.
class DemandMatrix {
 public:
  DemandMatrix() = default;
  explicit DemandMatrix(int ports);
  static DemandMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int ports() const { return ports_; }
  double at(int i, int j) const { return cells_[index(i, j)]; }
  double operator()(int i, int j) const { return at(i, j); }

  // Accumulate `amount` (> 0) onto entry (i, j).
  void add(int i, int j, double amount);

  bool zero() const;
  double total() const;
  int positive_entries() const;

 private:
  std::size_t index(int i, int j) const;

  int ports_ = 0;
  std::vector<double> cells_;
};

// Value-returning counterpart of DemandMatrix::add.
DemandMatrix add_entry(DemandMatrix d, int i, int j, double amount);

// Per-port totals and positive-entry counts of a demand matrix.
struct PortLoads {
  std::vector<double> ingress_load;  // row sums
  std::vector<double> egress_load;   // column sums
  std::vector<int> ingress_flows;    // positive entries per row
  std::vector<int> egress_flows;     // positive entries per column
};

PortLoads port_loads(const DemandMatrix& d);

// Largest single-port load (max over all row and column sums).
double max_port_load(const DemandMatrix& d);

// Largest number of distinct flows meeting at one port (max positive-entry
// count over rows and columns).
int max_port_flows(const DemandMatrix& d);

struct NetworkConfig {
  FabricMode mode = FabricMode::OCS;
  int ports = 0;              // N: fabric is N x N
  std::vector<double> rates;  // per-core port rate, one entry per core
  double delta = 0.0;         // circuit (re)configuration delay

  int cores() const { return static_cast<int>(rates.size()); }
  double total_rate() const;
  double max_rate() const;

  // Throws ConfigError: ports/cores must be positive, every rate positive,
  // delta nonnegative, and EPS implies delta == 0 (packet switches do not
  // pay a reconfiguration penalty).
  void validate() const;
};

struct CoflowSpec {
  std::int64_t id = 0;
  double weight = 1.0;
  DemandMatrix demand;
};

// A validated problem instance: coflows plus the fabric they run on.
class Workload {
 public:
  Workload(std::vector<CoflowSpec> coflows, NetworkConfig config);

  const std::vector<CoflowSpec>& coflows() const { return coflows_; }
  const NetworkConfig& config() const { return config_; }
  int count() const { return static_cast<int>(coflows_.size()); }

  // Position of a coflow id in coflows(); throws MissingCoflowError.
  int index_of(std::int64_t coflow_id) const;

 private:
  std::vector<CoflowSpec> coflows_;
  NetworkConfig config_;
};

// Replace each coflow's weight (same order); re-validates.
Workload with_weights(const Workload& w, std::span<const double> weights);

// Replace the network config (same demand matrices); re-validates.
Workload with_config(const Workload& w, NetworkConfig config);

// Split of every coflow's demand across cores. at(m, k) is the slice of
// coflow m routed through core k; slices must sum entrywise to the original
// demand, and each (i, j) entry must live on exactly one core (flows are
// never split).
class FlowAssignment {
 public:
  FlowAssignment() = default;
  FlowAssignment(int coflows, int cores, int ports);

  int coflows() const { return coflows_; }
  int cores() const { return cores_; }

  DemandMatrix& at(int m, int k);
  const DemandMatrix& at(int m, int k) const;

  // Throws DimensionMismatchError if shapes disagree with the workload, or
  // if slices fail to reproduce the demand exactly / split a flow.
  void validate_against(const Workload& w) const;

 private:
  int coflows_ = 0;
  int cores_ = 0;
  std::vector<DemandMatrix> slices_;  // coflow-major
};

// One circuit: core `core` connects ingress -> egress for one flow.
// Setup occupies [establish, start), transmission [start, finish).
struct CircuitEvent {
  std::int64_t coflow_id = 0;
  int core = 0;
  int ingress = 0;
  int egress = 0;
  double establish = 0.0;
  double start = 0.0;   // establish + delta
  double finish = 0.0;  // start + size / rate
  double size = 0.0;
};

struct Schedule {
  std::vector<CircuitEvent> events;
};

// Per-coflow completion times, indexed like workload.coflows(). A coflow's
// completion is the latest finish among its events; throws MissingCoflowError
// if a coflow has none.
std::vector<double> completion_times(const Schedule& s, const Workload& w);

}  // namespace coflowsim
