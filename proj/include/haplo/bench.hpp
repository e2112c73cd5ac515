#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "haplo/datagen.hpp"
#include "haplo/types.hpp"

namespace haplo::bench {

enum class Method { ManifoldMec, ManifoldFro, AltMin };

std::string to_string(Method m);
Method method_from_string(const std::string& s);  // throws InvalidArgumentError
std::vector<Method> all_methods();

/// p used at a given error ratio.  The linear schedule maps err_ratio in
/// [0.14, 0.28] onto p in [1.05, 1.2] and clamps outside that interval;
/// otherwise the fixed value is used.
double schedule_p(double err_ratio, bool linear, double fixed_p);

struct SweepConfig {
  int m = 250;
  int n = 300;
  std::vector<double> pds{0.1};
  std::vector<double> errs{0.25};
  int trials = 50;
  std::uint64_t base_seed = 1;
  std::vector<Method> methods = all_methods();
  SolverConfig solver;             // per-point p is overridden by the schedule
  bool p_schedule_linear = false;
  int jobs = 1;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  bool failed = false;
  std::string failure;
  double nmse = 0.0;
  std::int64_t hd = 0;
  std::int64_t mec = 0;
  int iterations = 0;
  double ms = 0.0;
};

struct TrialRow {
  Method method;
  double pd = 0.0;
  double err_ratio = 0.0;
  double p = 0.0;
  int trial = 0;
  TrialOutcome outcome;
};

struct AggregateRow {
  Method method;
  int m = 0;
  int n = 0;
  double pd = 0.0;
  double err_ratio = 0.0;
  double p = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  int trials = 0;
  int failures = 0;
  double mean_nmse = 0.0;
  double sd_nmse = 0.0;
  double mean_hd = 0.0;
  double sd_hd = 0.0;
  double mean_mec = 0.0;
  double sd_mec = 0.0;
  double mean_iters = 0.0;
  double mean_ms = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<AggregateRow> rows;   // grid-major, then method order
  std::vector<TrialRow> trial_rows;
};

/// Runs the full sweep.  Each (grid point, trial) pair draws one instance
/// with seed base_seed + trial, shared by all methods for paired comparison.
/// Trials may run on `jobs` worker threads; results are keyed by trial index
/// before aggregation so the output is independent of scheduling.  Trials
/// where a method throws are counted in `failures` and excluded from means.
///
/// The completed-matrix estimate scored by NMSE is the sign completion
/// chat * hhat^T of the solution factors (entrywise signs of u and v), the
/// +/-1 rank-one matrix the haplotype estimate induces.
SweepResult run_sweep(const SweepConfig& cfg);

/// One CSV row per (grid point, method), timing column last.
std::string aggregate_csv(const SweepResult& result);

/// One CSV row per (grid point, method, trial), timing column last.
std::string per_trial_csv(const SweepResult& result);

}  // namespace haplo::bench
