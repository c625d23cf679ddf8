#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "coflowsim/error.hpp"
#include "coflowsim/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"coflowsim: coflow scheduling on multi-core optical fabrics"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::string baseline;
  std::string schedule;
  std::string trace;
  std::string gen_out;
  std::uint64_t seed = 0;
  bool emit_schedules = false;

  CLI::App* run = app.add_subcommand("run", "run the scheduler sweep from a config");
  run->add_option("--config", config, "config JSON")->required();
  CLI::Option* run_seed = run->add_option("--seed", seed, "replace the config's seed list");
  run->add_option("--out", out, "output directory override");
  run->add_option("--baseline", baseline, "run only this algorithm (load-only or random)");
  run->add_flag("--emit-schedules", emit_schedules, "write schedule JSON per row");

  CLI::App* verify = app.add_subcommand("verify", "re-check a schedule file");
  verify->add_option("--schedule", schedule, "schedule JSON")->required();
  verify->add_option("--trace", trace, "trace CSV (defaults to the one the schedule names)");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search on tiny instances");
  oracle->add_option("--config", config, "config JSON")->required();
  oracle->add_option("--out", out, "output directory override");

  CLI::App* gen = app.add_subcommand("gen-workload", "write an instance as a trace CSV");
  gen->add_option("--config", config, "config JSON")->required();
  gen->add_option("--out", gen_out, "output trace path")->required();
  CLI::Option* gen_seed = gen->add_option("--seed", seed, "seed override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::optional<std::uint64_t> seed_opt;
      if (run_seed->count() > 0) seed_opt = seed;
      std::optional<std::filesystem::path> out_opt;
      if (!out.empty()) out_opt = out;
      std::optional<std::string> baseline_opt;
      if (!baseline.empty()) baseline_opt = baseline;
      return coflowsim::cmd_run(config, seed_opt, out_opt, baseline_opt, emit_schedules);
    }
    if (verify->parsed()) {
      std::optional<std::filesystem::path> trace_opt;
      if (!trace.empty()) trace_opt = trace;
      return coflowsim::cmd_verify(schedule, trace_opt);
    }
    if (oracle->parsed()) {
      std::optional<std::filesystem::path> out_opt;
      if (!out.empty()) out_opt = out;
      return coflowsim::cmd_oracle(config, out_opt);
    }
    std::optional<std::uint64_t> seed_opt;
    if (gen_seed->count() > 0) seed_opt = seed;
    return coflowsim::cmd_gen_workload(config, gen_out, seed_opt);
  } catch (const coflowsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
