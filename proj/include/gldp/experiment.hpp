#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gldp/generators.hpp"

namespace gldp {

enum class EstimatorKind {
  algorithm1,   // randomize + debias + subset-sum estimator
  rr_baseline,  // count copies in the noisy graph directly
};

std::string to_string(EstimatorKind kind);
EstimatorKind parse_estimator_kind(const std::string& text);

struct ExperimentConfig {
  GeneratorModel model = GeneratorModel::sbm2;
  double p_in = 0.25;
  double p_out = 0.05;
  int ba_m = 0;  // 0: use default_ba_attachment(n)
  std::string pattern_spec = "cycle:4";
  std::vector<double> epsilons{1.0, 5.0};
  std::vector<int> n_values;
  int trials = 10;
  std::uint64_t master_seed = 0;
  std::vector<EstimatorKind> estimators{EstimatorKind::algorithm1,
                                        EstimatorKind::rr_baseline};
  // Re-draw the graph (and truth) every trial instead of once per n.
  bool fresh_graph_per_trial = false;
  // Lift the per-cell work guard (see estimation_cost).
  bool slow = false;
  int threads = 1;
  // Where the caller intends to write the CSV; run_experiment itself does
  // not touch the filesystem.
  std::string out_path;
};

struct CellReport {
  int n = 0;
  double epsilon = 0.0;
  EstimatorKind estimator = EstimatorKind::algorithm1;
  double truth = 0.0;  // mean over trials when fresh_graph_per_trial
  std::vector<double> estimates;
  std::vector<double> trial_seconds;
  double estimate_mean = 0.0;
  double rmse_paper = 0.0;  // sqrt of the SUM of squared errors
  double rmse_mean = 0.0;   // sqrt of the MEAN of squared errors
  double rel_rmse_paper = 0.0;  // NaN when truth == 0
  double std_dev = 0.0;         // sample standard deviation of estimates
  double mean_trial_seconds = 0.0;
  std::uint64_t graph_seed = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellReport> cells;  // sorted by (n, epsilon, estimator)
  std::vector<std::string> skipped;  // diagnostics for cells over the guard
};

// Error metrics. rmse_paper intentionally roots the plain sum of squared
// errors (so rmse_paper == rmse_mean * sqrt(T)); both are reported.
double rmse_paper(std::span<const double> estimates, double truth);
double rmse_mean(std::span<const double> estimates, double truth);
double rel_rmse_paper(std::span<const double> estimates, double truth);

// Runs the sweep: per n one generated graph (shared across epsilons) and its
// exact count, then `trials` independent noise draws per (epsilon,
// estimator). Every seed is derived from (master_seed, n, epsilon, estimator,
// trial), so the outcome is independent of execution order. Cells whose
// estimated work exceeds the guard are skipped with a diagnostic unless
// config.slow is set.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Aggregate rows, one per cell:
// model,n,epsilon,pattern,estimator,trial_count,truth,estimate_mean,
// rmse_paper,rmse_mean,rel_rmse_paper,std_dev,mean_trial_seconds,seed
std::string to_csv(const ExperimentReport& report);

// One row per trial, no timing columns:
// model,n,epsilon,pattern,estimator,trial,estimate,seed
std::string raw_estimates_csv(const ExperimentReport& report);

// Least-squares slope of log(y) against log(x); pairs with non-positive
// values are skipped. Used to eyeball error-growth exponents.
double fit_loglog_slope(std::span<const double> xs,
                        std::span<const double> ys);

}  // namespace gldp
