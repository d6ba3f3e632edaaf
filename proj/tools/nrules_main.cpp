// nrules: run and analyze nRule state-reduction scenarios.
//
// Subcommands:
//   run            one trial, event log to stdout or --out (jsonl or csv)
//   batch          n trials, summary CSV (+ optional hit-time histogram CSV)
//   validate       parse and check a scenario file
//   list-scenarios print the built-in configurations
//
// Exit codes: 0 success, 1 usage error, 2 runtime error, 3 batch had paradox
// violations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nrules/errors.hpp"
#include "nrules/experience.hpp"
#include "nrules/montecarlo.hpp"
#include "nrules/scenario_file.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitParadox = 3;

void write_or_print(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nrules::IoError("cannot open output path '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw nrules::IoError("failed writing '" + path + "'");
}

double default_dt(const nrules::ScenarioSpec& spec) { return 1e-3 * spec.t_half; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stochastic state-reduction scenarios (four-rule dynamics)"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  double dt = 0.0;  // 0 = derive from t_half
  std::string out_path;
  std::string hist_path;
  std::string format = "jsonl";
  bool prune = false;

  CLI::App* run = app.add_subcommand("run", "run one trial and write its event log");
  run->add_option("--scenario", scenario_path, "scenario file")->required();
  run->add_option("--seed", seed, "trial seed (default 0)");
  run->add_option("--dt", dt, "step size in seconds (default 1e-3 * t_half)");
  run->add_option("--out", out_path, "output path (default stdout)");
  run->add_option("--format", format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  run->add_flag("--prune", prune, "drop phantom components as they appear");

  CLI::App* batch = app.add_subcommand("batch", "run many trials and write a summary");
  batch->add_option("--scenario", scenario_path, "scenario file")->required();
  batch->add_option("--trials", trials, "number of trials")->required()
      ->check(CLI::PositiveNumber);
  batch->add_option("--seed", seed, "base seed; trial i uses split_seed(seed, i)");
  batch->add_option("--dt", dt, "step size in seconds (default 1e-3 * t_half)");
  batch->add_option("--out", out_path, "summary CSV path (default stdout)");
  batch->add_option("--hist", hist_path, "hit-time histogram CSV path");
  batch->add_flag("--prune", prune, "drop phantom components as they appear");

  CLI::App* validate_cmd = app.add_subcommand("validate", "parse and check a scenario file");
  validate_cmd->add_option("--scenario", scenario_path, "scenario file")->required();

  CLI::App* list_cmd = app.add_subcommand("list-scenarios", "print built-in configurations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) {
      for (const auto& name : nrules::builtin_names()) {
        const auto version = nrules::parse_version(name);
        const nrules::ScenarioSpec spec = nrules::builtin_spec(*version);
        std::string extras;
        if (spec.has_observer()) {
          extras = ", t_look=" + nrules::format_number(*spec.obs_look_time) +
                   ", pi=" + nrules::format_number(*spec.obs_pi);
        }
        if (*version == nrules::Version::cat2_natural) {
          extras = ", internal_duration=" + nrules::format_number(spec.internal_duration) +
                   ", ordering=external-first|internal-first";
        }
        std::printf("%-20s t_half=%s, mech_duration=%s%s\n", name.c_str(),
                    nrules::format_number(spec.t_half).c_str(),
                    nrules::format_number(spec.mech_duration).c_str(), extras.c_str());
      }
      return kExitOk;
    }

    const nrules::ScenarioSpec spec = nrules::parse_scenario_file(scenario_path);

    if (validate_cmd->parsed()) {
      nrules::build_scenario(spec);  // builder agreement check
      std::printf("ok: %s (version %s, t_half %s)\n", scenario_path.c_str(),
                  nrules::to_string(spec.version).c_str(),
                  nrules::format_number(spec.t_half).c_str());
      return kExitOk;
    }

    if (dt == 0.0) dt = default_dt(spec);
    nrules::RunOptions options;
    options.prune = prune;

    if (run->parsed()) {
      const nrules::Trajectory trajectory = nrules::run_trial(spec, seed, dt, options);
      write_or_print(out_path,
                     format == "csv" ? nrules::to_csv(trajectory) : nrules::to_jsonl(trajectory));
      return kExitOk;
    }

    // batch
    const nrules::BatchSummary summary =
        nrules::run_batch(spec, trials, seed, dt, options);
    write_or_print(out_path, summary.to_csv());
    if (!hist_path.empty()) write_or_print(hist_path, summary.histogram_csv());
    if (summary.paradox_violations > 0) {
      std::fprintf(stderr, "paradox violations: %llu\n",
                   static_cast<unsigned long long>(summary.paradox_violations));
      return kExitParadox;
    }
    return kExitOk;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return kExitRuntime;
  }
}
