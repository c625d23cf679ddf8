#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coflowsim/baselines.hpp"
#include "coflowsim/model.hpp"
#include "coflowsim/scheduler.hpp"
#include "coflowsim/workload.hpp"

namespace coflowsim {

inline constexpr const char* kToolVersion = "0.1.0";

// Number of worker threads for sweep execution: the COFLOW_SIM_THREADS
// environment variable, with 0 or unset meaning "all hardware threads".
int worker_threads();

enum class WorkloadSource { Synthetic, Trace, Receivers };

struct RunConfig {
  NetworkConfig network;
  WorkloadSource source = WorkloadSource::Synthetic;
  SynthSpec synth;
  std::filesystem::path trace_path;      // Trace | Receivers
  double perturbation = 0.1;             // Receivers
  std::optional<WeightModel> weights;    // absent: synth/receivers get weight 1,
                                         // traces keep their own weights
  std::vector<std::string> algorithms;   // "ours", "load-only", "random"
  std::vector<std::uint64_t> seeds;
  std::string sweep_axis;                // "", "delta", "n", or "coflows"
  std::vector<double> sweep_values;
  std::filesystem::path output_dir;
  bool emit_schedules = false;
};

// Parse and fully validate a config. Relative input paths (trace, receivers)
// resolve against the config file's directory; a relative output_dir resolves
// against the working directory. Throws ConfigError / ParseError.
RunConfig load_config(const std::filesystem::path& path);

// One CSV row plus its sidecar payload.
struct RowResult {
  std::string algorithm;
  std::uint64_t seed = 0;
  int instance = 0;            // index of the (sweep value, seed) pair
  double sweep_value = 0.0;
  std::string mode;
  int cores = 0;
  int ports = 0;
  int coflows = 0;
  double delta = 0.0;
  double total_weighted_cct = 0.0;
  double norm_w = 1.0;
  double p95_cct = 0.0;
  double p99_cct = 0.0;
  double gamma_w = 0.0;
  double psi = 0.0;
  double lemma2_max_slack = 0.0;
  double lemma3_max_slack = 0.0;
  double theorem_bound_ratio = 0.0;
  double runtime_ms = 0.0;
  std::vector<BoundCheck> checks;
  std::string schedule_json;   // empty unless emit_schedules
  std::string workload_csv;    // instance trace, shared per instance
};

struct RunReport {
  std::vector<RowResult> rows;
};

// Build every instance, run every requested algorithm, audit everything.
// Parallel across instances; row order (and all output bytes except
// runtime_ms) depends only on the config.
RunReport execute_run(const RunConfig& config);

// results.csv + results.meta.json (+ schedules/ when requested) under
// config.output_dir. The CSV timing column is the only nondeterministic byte.
void write_outputs(const RunReport& report, const RunConfig& config);

// The instance behind one (sweep value, seed) pair — also used by gen-workload.
Workload build_instance(const RunConfig& config, double sweep_value, std::uint64_t seed);

// Schedule file round-trip. Serialization uses 1-based ports/cores.
std::string schedule_to_json(const SchedulerOutput& out, const Workload& w,
                             const std::string& algorithm, std::uint64_t seed,
                             const std::string& trace_file);
struct LoadedSchedule {
  NetworkConfig network;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string trace_file;
  std::vector<std::int64_t> order_ids;
  Schedule schedule;
};
LoadedSchedule schedule_from_json(const std::filesystem::path& path);

// CLI entry points; return a process exit code (0 ok, 1 failed checks or
// violations, 2 usage/input errors handled by the caller's catch).
int cmd_run(const std::filesystem::path& config_path,
            std::optional<std::uint64_t> seed_override,
            std::optional<std::filesystem::path> out_override,
            std::optional<std::string> baseline_override, bool emit_schedules);
int cmd_verify(const std::filesystem::path& schedule_path,
               std::optional<std::filesystem::path> trace_override);
int cmd_oracle(const std::filesystem::path& config_path,
               std::optional<std::filesystem::path> out_override);
int cmd_gen_workload(const std::filesystem::path& config_path,
                     const std::filesystem::path& out_path,
                     std::optional<std::uint64_t> seed_override);

}  // namespace coflowsim
