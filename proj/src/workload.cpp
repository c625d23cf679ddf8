#include "coflowsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "coflowsim/rng.hpp"
#include "coflowsim/textio.hpp"

namespace coflowsim {

std::vector<CoflowSpec> expand_receivers(std::span<const ReceiverRecord> records,
                                         int ports, double perturbation,
                                         std::uint64_t seed) {
  if (ports <= 0) throw ConfigError("expand_receivers needs a positive port count");
  if (!(perturbation >= 0.0) || perturbation >= 1.0)
    throw ConfigError("perturbation must lie in [0, 1)");

  SplitMix64 rng(seed);
  std::vector<CoflowSpec> coflows;
  std::map<std::int64_t, std::size_t> position;

  for (const ReceiverRecord& rec : records) {
    if (rec.receiver < 0 || rec.receiver >= ports)
      throw ParseError("receiver port out of range for coflow " + std::to_string(rec.coflow_id));
    if (!(rec.bytes > 0.0))
      throw ParseError("receiver bytes must be positive for coflow " + std::to_string(rec.coflow_id));
    if (rec.senders.empty())
      throw ParseError("receiver record without senders for coflow " + std::to_string(rec.coflow_id));
    for (int s : rec.senders)
      if (s < 0 || s >= ports)
        throw ParseError("sender port out of range for coflow " + std::to_string(rec.coflow_id));

    auto [it, fresh] = position.emplace(rec.coflow_id, coflows.size());
    if (fresh) coflows.push_back({rec.coflow_id, 1.0, DemandMatrix(ports)});
    DemandMatrix& demand = coflows[it->second].demand;

    std::vector<double> noise(rec.senders.size());
    double total = 0.0;
    for (double& u : noise) {
      u = rng.uniform(1.0 - perturbation, 1.0 + perturbation);
      total += u;
    }
    for (std::size_t s = 0; s < rec.senders.size(); ++s)
      demand.add(rec.senders[s], rec.receiver, rec.bytes * noise[s] / total);
  }
  return coflows;
}

std::vector<ReceiverRecord> load_receivers(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open receivers file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad receivers JSON in " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array())
    throw ParseError("receivers file needs a top-level \"records\" array");

  std::vector<ReceiverRecord> records;
  for (const auto& item : doc["records"]) {
    try {
      ReceiverRecord rec;
      rec.coflow_id = item.at("coflow_id").get<std::int64_t>();
      rec.receiver = item.at("receiver").get<int>() - 1;
      rec.bytes = item.at("bytes").get<double>();
      for (const auto& s : item.at("senders")) rec.senders.push_back(s.get<int>() - 1);
      records.push_back(std::move(rec));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("bad receiver record in " + path.string() + ": " + e.what());
    }
  }
  return records;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = line.find(',', begin);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

}  // namespace

Workload load_trace(std::istream& in, const NetworkConfig& config) {
  config.validate();
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty trace file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "coflow_id,weight,src,dst,size")
    throw ParseError("bad trace header '" + line +
                     "' (expected coflow_id,weight,src,dst,size)");

  struct Accum {
    double weight = 0.0;
    DemandMatrix demand;
  };
  std::vector<std::int64_t> order;
  std::map<std::int64_t, Accum> coflows;

  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv(line);
    if (f.size() != 5)
      throw ParseError("trace row " + std::to_string(row) + " has " +
                       std::to_string(f.size()) + " fields, expected 5");
    const std::int64_t id = parse_int(f[0], "coflow id");
    const double weight = parse_double(f[1], "weight");
    const std::int64_t src = parse_int(f[2], "src port");
    const std::int64_t dst = parse_int(f[3], "dst port");
    const double size = parse_double(f[4], "size");
    if (!(weight > 0.0))
      throw ParseError("trace row " + std::to_string(row) + ": weight must be positive");
    if (src < 1 || src > config.ports || dst < 1 || dst > config.ports)
      throw ParseError("trace row " + std::to_string(row) + ": port outside 1.." +
                       std::to_string(config.ports));
    if (size < 0.0 || !std::isfinite(size))
      throw ParseError("trace row " + std::to_string(row) + ": size must be nonnegative");

    auto it = coflows.find(id);
    if (it == coflows.end()) {
      it = coflows.emplace(id, Accum{weight, DemandMatrix(config.ports)}).first;
      order.push_back(id);
    } else if (it->second.weight != weight) {
      throw ParseError("trace row " + std::to_string(row) + ": coflow " + std::to_string(id) +
                       " appears with weights " + format_double(it->second.weight) + " and " +
                       format_double(weight));
    }
    if (size > 0.0)
      it->second.demand.add(static_cast<int>(src) - 1, static_cast<int>(dst) - 1, size);
  }
  if (order.empty()) throw ParseError("trace file has no flow rows");

  std::vector<CoflowSpec> specs;
  specs.reserve(order.size());
  for (std::int64_t id : order) {
    Accum& acc = coflows.at(id);
    specs.push_back({id, acc.weight, std::move(acc.demand)});
  }
  return Workload(std::move(specs), config);  // empty coflows rejected here
}

Workload load_trace(const std::filesystem::path& path, const NetworkConfig& config) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open trace file " + path.string());
  return load_trace(in, config);
}

void write_trace(std::ostream& out, const Workload& w) {
  out << "coflow_id,weight,src,dst,size\n";
  for (const CoflowSpec& c : w.coflows())
    for (int i = 0; i < c.demand.ports(); ++i)
      for (int j = 0; j < c.demand.ports(); ++j)
        if (c.demand.at(i, j) > 0.0)
          out << format_int(c.id) << ',' << format_double(c.weight) << ',' << i + 1 << ','
              << j + 1 << ',' << format_double(c.demand.at(i, j)) << '\n';
}

Workload synth_workload(const SynthSpec& spec, const NetworkConfig& config,
                        std::uint64_t seed) {
  config.validate();
  if (spec.coflows <= 0) throw ConfigError("synthetic workload needs at least one coflow");
  if (spec.min_flows <= 0) throw ConfigError("min_flows must be positive");
  if (!(spec.pareto_shape > 0.0) || !(spec.pareto_scale > 0.0))
    throw ConfigError("Pareto shape and scale must be positive");

  const int n = config.ports;
  const int pair_cap = n * n;
  int max_flows = spec.max_flows > 0 ? spec.max_flows : 2 * n;
  max_flows = std::min(max_flows, pair_cap);
  const int min_flows = std::min(spec.min_flows, max_flows);
  if (spec.max_flows > pair_cap)
    throw ConfigError("max_flows exceeds the " + std::to_string(pair_cap) +
                      " distinct port pairs of a " + std::to_string(n) + "-port fabric");

  SplitMix64 rng(seed);
  std::vector<CoflowSpec> coflows;
  coflows.reserve(static_cast<std::size_t>(spec.coflows));
  std::vector<char> used(static_cast<std::size_t>(pair_cap));
  for (int m = 0; m < spec.coflows; ++m) {
    const int f = static_cast<int>(rng.uniform_int(min_flows, max_flows));
    std::fill(used.begin(), used.end(), 0);
    DemandMatrix demand(n);
    for (int placed = 0; placed < f;) {
      const int i = static_cast<int>(rng.uniform_int(0, n - 1));
      const int j = static_cast<int>(rng.uniform_int(0, n - 1));
      if (used[static_cast<std::size_t>(i * n + j)]) continue;
      used[static_cast<std::size_t>(i * n + j)] = 1;
      demand.add(i, j, rng.pareto(spec.pareto_shape, spec.pareto_scale));
      ++placed;
    }
    coflows.push_back({m + 1, 1.0, std::move(demand)});
  }
  return Workload(std::move(coflows), config);
}

std::string to_string(WeightModel::Kind kind) {
  switch (kind) {
    case WeightModel::Kind::Constant: return "constant";
    case WeightModel::Kind::Uniform: return "uniform";
    default: return "normal";
  }
}

WeightModel::Kind weight_kind_from_string(const std::string& s) {
  if (s == "constant") return WeightModel::Kind::Constant;
  if (s == "uniform") return WeightModel::Kind::Uniform;
  if (s == "normal") return WeightModel::Kind::Normal;
  throw ConfigError("unknown weight model '" + s + "' (constant, uniform, or normal)");
}

std::vector<double> sample_weights(const WeightModel& model, int count,
                                   std::uint64_t seed) {
  if (count < 0) throw ConfigError("weight count must be nonnegative");
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(count));
  SplitMix64 rng(seed);
  switch (model.kind) {
    case WeightModel::Kind::Constant:
      if (!(model.a > 0.0)) throw ConfigError("constant weight must be positive");
      weights.assign(static_cast<std::size_t>(count), model.a);
      break;
    case WeightModel::Kind::Uniform:
      if (!(model.a > 0.0) || !(model.b >= model.a))
        throw ConfigError("uniform weights need 0 < lo <= hi");
      for (int i = 0; i < count; ++i) weights.push_back(rng.uniform(model.a, model.b));
      break;
    case WeightModel::Kind::Normal:
      if (!(model.a > 0.0) || !(model.b >= 0.0))
        throw ConfigError("normal weights need a positive mean and nonnegative stddev");
      for (int i = 0; i < count; ++i)
        weights.push_back(std::max(rng.normal(model.a, model.b), 1e-6 * model.a));
      break;
  }
  return weights;
}

}  // namespace coflowsim
