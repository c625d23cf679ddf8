#include "coflowsim/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "coflowsim/metrics.hpp"
#include "coflowsim/oracle.hpp"
#include "coflowsim/rng.hpp"
#include "coflowsim/textio.hpp"

namespace coflowsim {

namespace {

using nlohmann::json;

// Seed streams: 1 feeds demand generation, 2 weight sampling, 3 the random
// assignment baseline. Keeping them disjoint means adding an algorithm never
// shifts anyone else's draws.
constexpr std::uint64_t kDemandStream = 1;
constexpr std::uint64_t kWeightStream = 2;
constexpr std::uint64_t kAssignStream = 3;

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&key](const char* k) { return key == k; }) == allowed.end())
      throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

WeightModel parse_weight_model(const json& spec) {
  if (!spec.is_object() || !spec.contains("model"))
    throw ConfigError("weights needs a \"model\" field");
  WeightModel model;
  model.kind = weight_kind_from_string(spec.at("model").get<std::string>());
  switch (model.kind) {
    case WeightModel::Kind::Constant:
      require_keys(spec, {"model", "value"}, "weights");
      model.a = spec.value("value", 1.0);
      break;
    case WeightModel::Kind::Uniform:
      require_keys(spec, {"model", "lo", "hi"}, "weights");
      if (!spec.contains("lo") || !spec.contains("hi"))
        throw ConfigError("uniform weights need \"lo\" and \"hi\"");
      model.a = spec.at("lo").get<double>();
      model.b = spec.at("hi").get<double>();
      break;
    case WeightModel::Kind::Normal:
      require_keys(spec, {"model", "mean", "stddev"}, "weights");
      if (!spec.contains("mean") || !spec.contains("stddev"))
        throw ConfigError("normal weights need \"mean\" and \"stddev\"");
      model.a = spec.at("mean").get<double>();
      model.b = spec.at("stddev").get<double>();
      break;
  }
  return model;
}

int as_exact_int(double v, const std::string& what) {
  const int n = static_cast<int>(v);
  if (static_cast<double>(n) != v)
    throw ConfigError(what + " must be an integer, got " + format_double(v));
  return n;
}

RunConfig apply_sweep(const RunConfig& base, double value) {
  RunConfig eff = base;
  if (base.sweep_axis == "delta") {
    eff.network.delta = value;
  } else if (base.sweep_axis == "n") {
    eff.network.ports = as_exact_int(value, "sweep value for axis n");
  } else if (base.sweep_axis == "coflows") {
    eff.synth.coflows = as_exact_int(value, "sweep value for axis coflows");
  }
  eff.network.validate();
  return eff;
}

BaselineKind baseline_from_name(const std::string& name) {
  if (name == "load-only") return BaselineKind::LoadOnly;
  if (name == "random") return BaselineKind::Random;
  throw ConfigError("unknown algorithm '" + name + "' (ours, load-only, or random)");
}

SchedulerOutput run_main(const Workload& w) {
  return w.config().mode == FabricMode::OCS ? run(w) : run_eps(w);
}

}  // namespace

int worker_threads() {
  const char* env = std::getenv("COFLOW_SIM_THREADS");
  int n = 0;
  if (env != nullptr && *env != '\0')
    n = static_cast<int>(parse_int(env, "COFLOW_SIM_THREADS"));
  if (n < 0) throw ConfigError("COFLOW_SIM_THREADS must be nonnegative");
  if (n == 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(n, 1);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("bad config JSON in " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  require_keys(doc,
               {"mode", "n", "rates", "delta", "workload", "weights", "algorithms",
                "seeds", "sweep", "output_dir", "emit_schedules"},
               "config");

  const std::filesystem::path base_dir = path.parent_path();
  RunConfig cfg;
  try {
    cfg.network.mode = fabric_mode_from_string(doc.value("mode", std::string("OCS")));
    if (!doc.contains("n") || !doc.contains("rates"))
      throw ConfigError("config needs \"n\" and \"rates\"");
    cfg.network.ports = doc.at("n").get<int>();
    cfg.network.rates = doc.at("rates").get<std::vector<double>>();
    cfg.network.delta = doc.value("delta", 0.0);
    cfg.network.validate();

    const json& wl = doc.at("workload");
    if (!wl.is_object() || !wl.contains("kind"))
      throw ConfigError("workload needs a \"kind\" field");
    const std::string kind = wl.at("kind").get<std::string>();
    if (kind == "synthetic") {
      require_keys(wl, {"kind", "coflows", "min_flows", "max_flows", "pareto_shape",
                        "pareto_scale"},
                   "workload");
      cfg.source = WorkloadSource::Synthetic;
      cfg.synth.coflows = wl.value("coflows", cfg.synth.coflows);
      cfg.synth.min_flows = wl.value("min_flows", cfg.synth.min_flows);
      cfg.synth.max_flows = wl.value("max_flows", cfg.synth.max_flows);
      cfg.synth.pareto_shape = wl.value("pareto_shape", cfg.synth.pareto_shape);
      cfg.synth.pareto_scale = wl.value("pareto_scale", cfg.synth.pareto_scale);
    } else if (kind == "trace") {
      require_keys(wl, {"kind", "path"}, "workload");
      cfg.source = WorkloadSource::Trace;
      cfg.trace_path = base_dir / wl.at("path").get<std::string>();
    } else if (kind == "receivers") {
      require_keys(wl, {"kind", "path", "perturbation"}, "workload");
      cfg.source = WorkloadSource::Receivers;
      cfg.trace_path = base_dir / wl.at("path").get<std::string>();
      cfg.perturbation = wl.value("perturbation", 0.1);
    } else {
      throw ConfigError("unknown workload kind '" + kind +
                        "' (synthetic, trace, or receivers)");
    }

    if (doc.contains("weights")) cfg.weights = parse_weight_model(doc.at("weights"));

    cfg.algorithms = doc.value("algorithms", std::vector<std::string>{"ours"});
    if (cfg.algorithms.empty()) throw ConfigError("algorithms must not be empty");
    for (const std::string& a : cfg.algorithms)
      if (a != "ours") (void)baseline_from_name(a);

    if (doc.contains("seeds")) {
      cfg.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
      cfg.seeds = {0};
    }
    if (cfg.seeds.empty()) throw ConfigError("seeds must not be empty");

    if (doc.contains("sweep")) {
      const json& sw = doc.at("sweep");
      require_keys(sw, {"axis", "values"}, "sweep");
      if (!sw.contains("axis") || !sw.contains("values"))
        throw ConfigError("sweep needs \"axis\" and \"values\"");
      cfg.sweep_axis = sw.at("axis").get<std::string>();
      cfg.sweep_values = sw.at("values").get<std::vector<double>>();
      if (cfg.sweep_axis != "delta" && cfg.sweep_axis != "n" && cfg.sweep_axis != "coflows")
        throw ConfigError("unknown sweep axis '" + cfg.sweep_axis +
                          "' (delta, n, or coflows)");
      if (cfg.sweep_values.empty()) throw ConfigError("sweep values must not be empty");
      if (cfg.sweep_axis != "delta" && cfg.source != WorkloadSource::Synthetic)
        throw ConfigError("sweep axis '" + cfg.sweep_axis +
                          "' needs a synthetic workload; a file pins it");
      if (cfg.sweep_axis == "delta" && cfg.network.mode == FabricMode::EPS)
        for (double v : cfg.sweep_values)
          if (v != 0.0) throw ConfigError("EPS mode cannot sweep delta away from 0");
    }

    // Inputs resolve against the config file so configs stay relocatable;
    // outputs land where the user invoked us, like every other CLI.
    cfg.output_dir = doc.value("output_dir", std::string("out"));
    cfg.emit_schedules = doc.value("emit_schedules", false);

    // Fail fast on sweep values the axis cannot accept.
    for (double v : cfg.sweep_values) (void)apply_sweep(cfg, v);
  } catch (const json::exception& e) {
    throw ConfigError("bad config value in " + path.string() + ": " + e.what());
  }
  return cfg;
}

Workload build_instance(const RunConfig& config, double sweep_value, std::uint64_t seed) {
  const RunConfig eff = apply_sweep(config, sweep_value);
  Workload base = [&eff, seed]() {
    switch (eff.source) {
      case WorkloadSource::Synthetic:
        return synth_workload(eff.synth, eff.network, mix_seed(seed, kDemandStream));
      case WorkloadSource::Trace:
        return load_trace(eff.trace_path, eff.network);
      default: {
        const std::vector<ReceiverRecord> records = load_receivers(eff.trace_path);
        std::vector<CoflowSpec> coflows = expand_receivers(
            records, eff.network.ports, eff.perturbation, mix_seed(seed, kDemandStream));
        return Workload(std::move(coflows), eff.network);
      }
    }
  }();
  if (!config.weights.has_value()) return base;
  const std::vector<double> weights =
      sample_weights(*config.weights, base.count(), mix_seed(seed, kWeightStream));
  return with_weights(base, weights);
}

namespace {

RowResult make_row(const RunConfig& config, const Workload& w, const std::string& algorithm,
                   std::uint64_t seed, int instance, double sweep_value,
                   const SchedulerOutput& out, double reference_total, double runtime_ms) {
  RowResult row;
  row.algorithm = algorithm;
  row.seed = seed;
  row.instance = instance;
  row.sweep_value = sweep_value;
  row.mode = to_string(w.config().mode);
  row.cores = w.config().cores();
  row.ports = w.config().ports;
  row.coflows = w.count();
  row.delta = w.config().delta;
  row.total_weighted_cct = out.audit.total_weighted_cct;
  row.norm_w = norm_w(out.audit.total_weighted_cct, reference_total);
  row.p95_cct = tail_cct(out.audit.completion, 95.0);
  row.p99_cct = tail_cct(out.audit.completion, 99.0);
  row.gamma_w = out.audit.gamma_w;
  row.psi = out.audit.psi;
  row.lemma2_max_slack = out.audit.assign_prefix_max_slack;
  row.lemma3_max_slack = out.audit.sched_prefix_max_slack;
  row.theorem_bound_ratio = out.audit.theorem_bound_ratio;
  row.runtime_ms = runtime_ms;
  row.checks = out.audit.checks;
  if (config.emit_schedules) {
    char trace_name[32];
    std::snprintf(trace_name, sizeof trace_name, "workload_%04d.csv", instance);
    row.schedule_json = schedule_to_json(out, w, algorithm, seed, trace_name);
  }
  return row;
}

}  // namespace

RunReport execute_run(const RunConfig& config) {
  const std::vector<double> values =
      config.sweep_axis.empty() ? std::vector<double>{0.0} : config.sweep_values;
  const int seeds = static_cast<int>(config.seeds.size());
  const int instances = static_cast<int>(values.size()) * seeds;
  const int algos = static_cast<int>(config.algorithms.size());

  RunReport report;
  report.rows.assign(static_cast<std::size_t>(instances) * algos, RowResult{});

  std::atomic<int> cursor{0};
  std::mutex error_mu;
  std::exception_ptr first_error;

  auto work = [&]() {
    while (true) {
      const int instance = cursor.fetch_add(1);
      if (instance >= instances) return;
      try {
        const double value = values[static_cast<std::size_t>(instance / seeds)];
        const std::uint64_t seed = config.seeds[static_cast<std::size_t>(instance % seeds)];
        const Workload w = build_instance(config, value, seed);

        const auto t0 = std::chrono::steady_clock::now();
        const SchedulerOutput ours = run_main(w);
        const double ours_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        const double reference = ours.audit.total_weighted_cct;

        for (int a = 0; a < algos; ++a) {
          const std::string& name = config.algorithms[static_cast<std::size_t>(a)];
          RowResult row;
          if (name == "ours") {
            row = make_row(config, w, name, seed, instance, value, ours, reference, ours_ms);
          } else {
            const BaselineKind kind = baseline_from_name(name);
            const auto b0 = std::chrono::steady_clock::now();
            const SchedulerOutput out =
                run_baseline(kind, w, mix_seed(seed, kAssignStream));
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - b0)
                                  .count();
            row = make_row(config, w, name, seed, instance, value, out, reference, ms);
          }
          if (a == 0 && config.emit_schedules) {
            std::ostringstream trace;
            write_trace(trace, w);
            row.workload_csv = trace.str();
          }
          report.rows[static_cast<std::size_t>(instance) * algos + a] = std::move(row);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int threads = std::min(worker_threads(), instances);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return report;
}

void write_outputs(const RunReport& report, const RunConfig& config) {
  std::filesystem::create_directories(config.output_dir);

  std::ofstream csv(config.output_dir / "results.csv", std::ios::binary);
  if (!csv) throw ParseError("cannot write " + (config.output_dir / "results.csv").string());
  csv << "algorithm,seed,mode,K,N,M,delta,total_weighted_cct,norm_w,p95_cct,p99_cct,"
         "gamma_w,psi,lemma2_max_slack,lemma3_max_slack,theorem_bound_ratio,runtime_ms\n";
  for (const RowResult& row : report.rows) {
    csv << row.algorithm << ',' << format_int(static_cast<std::int64_t>(row.seed)) << ','
        << row.mode << ',' << row.cores << ',' << row.ports << ',' << row.coflows << ','
        << format_double(row.delta) << ',' << format_double(row.total_weighted_cct) << ','
        << format_double(row.norm_w) << ',' << format_double(row.p95_cct) << ','
        << format_double(row.p99_cct) << ',' << format_double(row.gamma_w) << ','
        << format_double(row.psi) << ',' << format_double(row.lemma2_max_slack) << ','
        << format_double(row.lemma3_max_slack) << ','
        << format_double(row.theorem_bound_ratio) << ','
        << format_double(row.runtime_ms) << '\n';
  }
  csv.close();

  json meta;
  meta["created"] = iso_utc_now();
  meta["rng"] = kRngName;
  meta["tool"] = std::string("coflowsim ") + kToolVersion;
  meta["seed_streams"] = {{"demands", kDemandStream},
                          {"weights", kWeightStream},
                          {"random_assignment", kAssignStream}};
  json rows = json::array();
  for (const RowResult& row : report.rows) {
    json checks = json::array();
    for (const BoundCheck& c : row.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"slack", c.slack}});
    rows.push_back({{"algorithm", row.algorithm},
                    {"seed", row.seed},
                    {"instance", row.instance},
                    {"checks", std::move(checks)}});
  }
  meta["rows"] = std::move(rows);
  std::ofstream meta_out(config.output_dir / "results.meta.json", std::ios::binary);
  meta_out << meta.dump(2) << '\n';

  if (config.emit_schedules) {
    const std::filesystem::path dir = config.output_dir / "schedules";
    std::filesystem::create_directories(dir);
    for (const RowResult& row : report.rows) {
      if (!row.workload_csv.empty()) {
        char name[32];
        std::snprintf(name, sizeof name, "workload_%04d.csv", row.instance);
        std::ofstream out(dir / name, std::ios::binary);
        out << row.workload_csv;
      }
      if (!row.schedule_json.empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "schedule_%04d_%s.json", row.instance,
                      row.algorithm.c_str());
        std::ofstream out(dir / name, std::ios::binary);
        out << row.schedule_json;
      }
    }
  }
}

std::string schedule_to_json(const SchedulerOutput& out, const Workload& w,
                             const std::string& algorithm, std::uint64_t seed,
                             const std::string& trace_file) {
  json doc;
  doc["algorithm"] = algorithm;
  doc["mode"] = to_string(w.config().mode);
  doc["n"] = w.config().ports;
  doc["rates"] = w.config().rates;
  doc["delta"] = w.config().delta;
  doc["seed"] = seed;
  doc["trace"] = trace_file;
  json order = json::array();
  for (int m : out.order) order.push_back(w.coflows()[m].id);
  doc["order"] = std::move(order);
  json events = json::array();
  for (const CircuitEvent& e : out.schedule.events)
    events.push_back({{"coflow", e.coflow_id},
                      {"core", e.core + 1},
                      {"ingress", e.ingress + 1},
                      {"egress", e.egress + 1},
                      {"establish", e.establish},
                      {"start", e.start},
                      {"finish", e.finish},
                      {"size", e.size}});
  doc["events"] = std::move(events);
  return doc.dump(2) + "\n";
}

LoadedSchedule schedule_from_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open schedule file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("bad schedule JSON in " + path.string() + ": " + e.what());
  }
  LoadedSchedule ls;
  try {
    ls.network.mode = fabric_mode_from_string(doc.at("mode").get<std::string>());
    ls.network.ports = doc.at("n").get<int>();
    ls.network.rates = doc.at("rates").get<std::vector<double>>();
    ls.network.delta = doc.at("delta").get<double>();
    ls.network.validate();
    ls.algorithm = doc.at("algorithm").get<std::string>();
    ls.seed = doc.value("seed", 0ull);
    ls.trace_file = doc.value("trace", std::string{});
    for (const auto& id : doc.at("order")) ls.order_ids.push_back(id.get<std::int64_t>());
    for (const auto& ev : doc.at("events")) {
      CircuitEvent e;
      e.coflow_id = ev.at("coflow").get<std::int64_t>();
      e.core = ev.at("core").get<int>() - 1;
      e.ingress = ev.at("ingress").get<int>() - 1;
      e.egress = ev.at("egress").get<int>() - 1;
      e.establish = ev.at("establish").get<double>();
      e.start = ev.at("start").get<double>();
      e.finish = ev.at("finish").get<double>();
      e.size = ev.at("size").get<double>();
      ls.schedule.events.push_back(e);
    }
  } catch (const json::exception& e) {
    throw ParseError("bad schedule value in " + path.string() + ": " + e.what());
  }
  return ls;
}

int cmd_run(const std::filesystem::path& config_path,
            std::optional<std::uint64_t> seed_override,
            std::optional<std::filesystem::path> out_override,
            std::optional<std::string> baseline_override, bool emit_schedules) {
  RunConfig config = load_config(config_path);
  if (seed_override.has_value()) config.seeds = {*seed_override};
  if (out_override.has_value()) config.output_dir = *out_override;
  if (baseline_override.has_value()) {
    (void)baseline_from_name(*baseline_override);  // validates the name
    config.algorithms = {*baseline_override};
  }
  if (emit_schedules) config.emit_schedules = true;

  const RunReport report = execute_run(config);
  write_outputs(report, config);

  int failed_main_audits = 0;
  for (const RowResult& row : report.rows)
    if (row.algorithm == "ours")
      for (const BoundCheck& c : row.checks)
        if (!c.pass) ++failed_main_audits;
  std::cout << "wrote " << report.rows.size() << " rows to "
            << (config.output_dir / "results.csv").string() << "\n";
  // Bound-audit outcomes are data, not errors: the slack columns record how
  // far each run lands from the analytical envelopes, and setup-heavy
  // workloads genuinely exceed some of them. Only operational failures
  // (bad config, unwritable output) make `run` exit nonzero.
  if (failed_main_audits > 0)
    std::cout << "note: " << failed_main_audits
              << " bound audits exceeded their envelope for the main algorithm"
                 " (see the slack columns)\n";
  else
    std::cout << "all main-algorithm bound audits passed\n";
  return 0;
}

int cmd_verify(const std::filesystem::path& schedule_path,
               std::optional<std::filesystem::path> trace_override) {
  const LoadedSchedule ls = schedule_from_json(schedule_path);
  const std::filesystem::path trace_path =
      trace_override.has_value() ? *trace_override
                                 : schedule_path.parent_path() / ls.trace_file;
  if (ls.trace_file.empty() && !trace_override.has_value())
    throw ParseError("schedule file names no trace; pass one with --trace");
  const Workload w = load_trace(trace_path, ls.network);

  int violations = 0;
  auto complain = [&violations](const std::string& kind, const std::string& detail) {
    std::cout << "violation [" << kind << "] " << detail << "\n";
    ++violations;
  };

  FlowAssignment assignment(w.count(), ls.network.cores(), ls.network.ports);
  bool structural_ok = true;
  try {
    for (const CircuitEvent& e : ls.schedule.events)
      assignment.at(w.index_of(e.coflow_id), e.core).add(e.ingress, e.egress, e.size);
    assignment.validate_against(w);
  } catch (const Error& e) {
    complain("structure", e.what());
    structural_ok = false;
  } catch (const std::exception& e) {
    complain("structure", e.what());
    structural_ok = false;
  }

  if (structural_ok) {
    const VerifyReport report = verify_schedule(ls.schedule, assignment, w);
    for (const Violation& v : report.violations) complain(v.kind, v.detail);

    std::vector<int> order;
    order.reserve(ls.order_ids.size());
    for (std::int64_t id : ls.order_ids) order.push_back(w.index_of(id));
    const BoundAudit audit = audit_run(w, order, assignment, ls.schedule);

    // Only the floor-side audits are guarantees: the global floor binds any
    // feasible schedule, and the prefix-floor envelope binds the min-floor
    // assigner. The schedule-side envelopes are tripwires that setup-heavy
    // instances can legitimately exceed (the schedule pays the setup delay
    // per circuit, the floor charges each distinct port pair once), so they
    // are reported but do not fail verification.
    const bool main_run = ls.algorithm == "ours";
    for (const BoundCheck& c : audit.checks) {
      const bool required =
          c.name == "global_lb" || (main_run && c.name == "assign_prefix");
      std::cout << "audit " << c.name << ": " << (c.pass ? "pass" : "FAIL")
                << " (slack " << format_double(c.slack) << ")"
                << (required ? "" : " [informational]") << "\n";
      if (required && !c.pass) ++violations;
    }
  }

  if (violations > 0) {
    std::cout << violations << " problem(s) found\n";
    return 1;
  }
  std::cout << "schedule verified: feasible and within the guaranteed bounds\n";
  return 0;
}

int cmd_oracle(const std::filesystem::path& config_path,
               std::optional<std::filesystem::path> out_override) {
  RunConfig config = load_config(config_path);
  if (out_override.has_value()) config.output_dir = *out_override;
  if (!config.sweep_axis.empty())
    throw ConfigError("the oracle command ignores sweeps; drop the sweep section");

  std::filesystem::create_directories(config.output_dir);
  std::ofstream csv(config.output_dir / "oracle.csv", std::ios::binary);
  csv << "seed,flows,algorithm_total,oracle_total,floor_total,algorithm_oracle_ratio,"
         "oracle_floor_ratio\n";

  double worst_algo_ratio = 1.0;
  for (std::uint64_t seed : config.seeds) {
    const Workload w = build_instance(config, 0.0, seed);
    const OracleResult oracle = best_list_schedule(w);
    const SchedulerOutput ours = run_main(w);
    const double algo = ours.audit.total_weighted_cct;
    const double flows = static_cast<double>(canonical_flows(w).size());
    const double algo_ratio = algo / oracle.best_total;
    const double floor_ratio = oracle.best_total / oracle.weighted_floor_sum;
    worst_algo_ratio = std::max(worst_algo_ratio, algo_ratio);
    csv << format_int(static_cast<std::int64_t>(seed)) << ','
        << format_int(static_cast<std::int64_t>(flows)) << ',' << format_double(algo) << ','
        << format_double(oracle.best_total) << ','
        << format_double(oracle.weighted_floor_sum) << ',' << format_double(algo_ratio)
        << ',' << format_double(floor_ratio) << '\n';
    std::cout << "seed " << seed << ": algorithm/oracle = " << format_double(algo_ratio)
              << ", oracle/floor = " << format_double(floor_ratio) << "\n";
  }
  std::cout << "worst algorithm/oracle ratio: " << format_double(worst_algo_ratio) << "\n";
  std::cout << "wrote " << (config.output_dir / "oracle.csv").string() << "\n";
  return 0;
}

int cmd_gen_workload(const std::filesystem::path& config_path,
                     const std::filesystem::path& out_path,
                     std::optional<std::uint64_t> seed_override) {
  const RunConfig config = load_config(config_path);
  const std::uint64_t seed = seed_override.value_or(config.seeds.front());
  const Workload w = build_instance(config, config.sweep_axis.empty() ? 0.0
                                            : config.sweep_values.front(),
                                    seed);
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write trace file " + out_path.string());
  write_trace(out, w);
  int flows = 0;
  for (const CoflowSpec& c : w.coflows()) flows += c.demand.positive_entries();
  std::cout << "wrote " << w.count() << " coflows (" << flows << " flows) to "
            << out_path.string() << "\n";
  return 0;
}

}  // namespace coflowsim
