#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nrules/scenario.hpp"
#include "nrules/trajectory.hpp"

namespace nrules {

struct RunOptions {
  bool prune = false;               // drop phantoms as they appear
  bool check_each_step = false;     // validate + conservation check per step
  double conservation_tol = 1e-6;
};

// One trial: a pure function of (spec, seed, dt). The loop per step is
// schedule triggers -> hit sampling -> current transfer and classical phase
// advance -> window rotation -> cutoff/phantomization -> optional pruning,
// ending at max(cutoff, all phase completions) + dt.
Trajectory run_trial(const BuiltScenario& scenario, std::uint64_t seed, double dt,
                     const RunOptions& options = {});
Trajectory run_trial(const ScenarioSpec& spec, std::uint64_t seed, double dt,
                     const RunOptions& options = {});

struct HitTimeHistogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::uint64_t> counts;

  double bin_width() const { return counts.empty() ? 0.0 : (hi - lo) / counts.size(); }
};

struct BatchSummary {
  std::uint64_t n_trials = 0;
  std::uint64_t hits = 0;
  double hit_fraction = 0.0;
  HitTimeHistogram hit_time_histogram;
  std::map<std::string, std::uint64_t> outcome_counts;  // terminal label set -> count
  double ks_statistic = 0.0;                            // 0 when no hits
  std::uint64_t paradox_violations = 0;

  std::string to_csv() const;
  std::string histogram_csv() const;
};

// Runs n trials with per-trial seeds split_seed(base_seed, i). Trials execute
// in parallel (NRULES_THREADS caps the worker count; 0 = machine cores);
// aggregation is in trial-index order, so the summary is deterministic.
BatchSummary run_batch(const ScenarioSpec& spec, std::uint64_t n, std::uint64_t base_seed,
                       double dt, const RunOptions& options = {}, unsigned threads = 0,
                       std::size_t histogram_bins = 50);

// Kolmogorov-Smirnov sup-distance between the empirical CDF of `hit_times`
// (measured from t0 = 0) and the truncated-exponential law
// F(tau) = (1 - exp(-lambda tau)) / (1 - exp(-lambda cutoff)).
// Throws DomainError on empty input.
double ks_test(std::vector<double> hit_times, double lambda, double cutoff);

unsigned resolve_thread_count(unsigned requested);

}  // namespace nrules
