#include "coflowsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace coflowsim {

std::string to_string(FabricMode mode) {
  return mode == FabricMode::OCS ? "OCS" : "EPS";
}

FabricMode fabric_mode_from_string(const std::string& s) {
  if (s == "OCS") return FabricMode::OCS;
  if (s == "EPS") return FabricMode::EPS;
  throw ConfigError("unknown fabric mode '" + s + "' (expected OCS or EPS)");
}

DemandMatrix::DemandMatrix(int ports) : ports_(ports) {
  if (ports <= 0) throw DimensionMismatchError("demand matrix needs at least one port");
  cells_.assign(static_cast<std::size_t>(ports) * ports, 0.0);
}

DemandMatrix DemandMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  DemandMatrix d(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw DimensionMismatchError("demand matrix must be square");
    for (int j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!(v >= 0.0) || !std::isfinite(v))
        throw DimensionMismatchError("demand entries must be finite and nonnegative");
      d.cells_[d.index(i, j)] = v;
    }
  }
  return d;
}

std::size_t DemandMatrix::index(int i, int j) const {
  if (i < 0 || i >= ports_ || j < 0 || j >= ports_)
    throw std::out_of_range("demand matrix index out of range");
  return static_cast<std::size_t>(i) * ports_ + j;
}

void DemandMatrix::add(int i, int j, double amount) {
  if (!(amount > 0.0) || !std::isfinite(amount))
    throw std::invalid_argument("demand increments must be positive and finite");
  cells_[index(i, j)] += amount;
}

bool DemandMatrix::zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](double v) { return v == 0.0; });
}

double DemandMatrix::total() const {
  double t = 0.0;
  for (double v : cells_) t += v;
  return t;
}

int DemandMatrix::positive_entries() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](double v) { return v > 0.0; }));
}

DemandMatrix add_entry(DemandMatrix d, int i, int j, double amount) {
  d.add(i, j, amount);
  return d;
}

PortLoads port_loads(const DemandMatrix& d) {
  const int n = d.ports();
  PortLoads out;
  out.ingress_load.assign(n, 0.0);
  out.egress_load.assign(n, 0.0);
  out.ingress_flows.assign(n, 0);
  out.egress_flows.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = d.at(i, j);
      if (v > 0.0) {
        out.ingress_load[i] += v;
        out.egress_load[j] += v;
        ++out.ingress_flows[i];
        ++out.egress_flows[j];
      }
    }
  }
  return out;
}

double max_port_load(const DemandMatrix& d) {
  const PortLoads pl = port_loads(d);
  double best = 0.0;
  for (double v : pl.ingress_load) best = std::max(best, v);
  for (double v : pl.egress_load) best = std::max(best, v);
  return best;
}

int max_port_flows(const DemandMatrix& d) {
  const PortLoads pl = port_loads(d);
  int best = 0;
  for (int v : pl.ingress_flows) best = std::max(best, v);
  for (int v : pl.egress_flows) best = std::max(best, v);
  return best;
}

double NetworkConfig::total_rate() const {
  double r = 0.0;
  for (double v : rates) r += v;
  return r;
}

double NetworkConfig::max_rate() const {
  double r = 0.0;
  for (double v : rates) r = std::max(r, v);
  return r;
}

void NetworkConfig::validate() const {
  if (ports <= 0) throw ConfigError("network needs a positive port count");
  if (rates.empty()) throw ConfigError("network needs at least one core rate");
  for (double r : rates)
    if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("core rates must be positive and finite");
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw ConfigError("reconfiguration delay must be nonnegative and finite");
  if (mode == FabricMode::EPS && delta != 0.0)
    throw ConfigError("EPS mode has no reconfiguration delay; delta must be 0");
}

Workload::Workload(std::vector<CoflowSpec> coflows, NetworkConfig config)
    : coflows_(std::move(coflows)), config_(std::move(config)) {
  config_.validate();
  std::unordered_set<std::int64_t> ids;
  for (const CoflowSpec& c : coflows_) {
    if (!ids.insert(c.id).second)
      throw DuplicateCoflowIdError("duplicate coflow id " + std::to_string(c.id));
    if (!(c.weight > 0.0) || !std::isfinite(c.weight))
      throw ConfigError("coflow " + std::to_string(c.id) + " needs a positive finite weight");
    if (c.demand.ports() != config_.ports)
      throw DimensionMismatchError("coflow " + std::to_string(c.id) +
                                   " demand is " + std::to_string(c.demand.ports()) +
                                   "x" + std::to_string(c.demand.ports()) +
                                   " but the fabric has " + std::to_string(config_.ports) + " ports");
    if (c.demand.zero())
      throw EmptyCoflowError("coflow " + std::to_string(c.id) + " has no positive demand");
  }
}

int Workload::index_of(std::int64_t coflow_id) const {
  for (int m = 0; m < count(); ++m)
    if (coflows_[m].id == coflow_id) return m;
  throw MissingCoflowError("coflow id " + std::to_string(coflow_id) + " is not in the workload");
}

Workload with_weights(const Workload& w, std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != w.count())
    throw DimensionMismatchError("weight vector length must match coflow count");
  std::vector<CoflowSpec> coflows = w.coflows();
  for (std::size_t m = 0; m < weights.size(); ++m) coflows[m].weight = weights[m];
  return Workload(std::move(coflows), w.config());
}

Workload with_config(const Workload& w, NetworkConfig config) {
  return Workload(w.coflows(), std::move(config));
}

FlowAssignment::FlowAssignment(int coflows, int cores, int ports)
    : coflows_(coflows), cores_(cores) {
  if (coflows < 0 || cores <= 0 || ports <= 0)
    throw DimensionMismatchError("bad flow assignment shape");
  slices_.assign(static_cast<std::size_t>(coflows) * cores, DemandMatrix(ports));
}

DemandMatrix& FlowAssignment::at(int m, int k) {
  if (m < 0 || m >= coflows_ || k < 0 || k >= cores_)
    throw std::out_of_range("flow assignment index out of range");
  return slices_[static_cast<std::size_t>(m) * cores_ + k];
}

const DemandMatrix& FlowAssignment::at(int m, int k) const {
  return const_cast<FlowAssignment*>(this)->at(m, k);
}

void FlowAssignment::validate_against(const Workload& w) const {
  if (coflows_ != w.count() || cores_ != w.config().cores())
    throw DimensionMismatchError("flow assignment shape does not match the workload");
  const int n = w.config().ports;
  for (int m = 0; m < coflows_; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        int carriers = 0;
        for (int k = 0; k < cores_; ++k) {
          const DemandMatrix& slice = at(m, k);
          if (slice.ports() != n)
            throw DimensionMismatchError("flow assignment slice has the wrong port count");
          const double v = slice.at(i, j);
          sum += v;
          if (v > 0.0) ++carriers;
        }
        const double want = w.coflows()[m].demand.at(i, j);
        // Slices are copies of original entries, so equality is exact.
        if (sum != want)
          throw DimensionMismatchError("flow assignment does not reproduce the demand exactly");
        if (carriers > 1)
          throw DimensionMismatchError("a flow was split across cores");
      }
    }
  }
}

std::vector<double> completion_times(const Schedule& s, const Workload& w) {
  std::vector<double> out(static_cast<std::size_t>(w.count()),
                          -std::numeric_limits<double>::infinity());
  for (const CircuitEvent& e : s.events) {
    const int m = w.index_of(e.coflow_id);
    out[m] = std::max(out[m], e.finish);
  }
  for (int m = 0; m < w.count(); ++m)
    if (out[m] < 0.0)
      throw MissingCoflowError("schedule has no events for coflow id " +
                               std::to_string(w.coflows()[m].id));
  return out;
}

}  // namespace coflowsim
