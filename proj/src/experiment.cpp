#include "gldp/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gldp/estimator.hpp"
#include "gldp/oracle.hpp"
#include "gldp/pattern.hpp"
#include "gldp/rng.hpp"

namespace gldp {

namespace {

// Guard for the default (non --slow) mode: cells whose estimator would touch
// more than this many subset placements are skipped.
constexpr double kWorkGuard = 1e10;

std::uint64_t seed_tag(EstimatorKind kind) {
  return kind == EstimatorKind::algorithm1 ? 1 : 2;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double mean_of(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double total = 0.0;
  for (double x : xs) total += x;
  return total / static_cast<double>(xs.size());
}

double sum_sq_err(std::span<const double> estimates, double truth) {
  double total = 0.0;
  for (double e : estimates) total += (e - truth) * (e - truth);
  return total;
}

}  // namespace

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::algorithm1:
      return "algorithm1";
    case EstimatorKind::rr_baseline:
      return "rr_baseline";
  }
  throw std::invalid_argument("unknown estimator kind");
}

EstimatorKind parse_estimator_kind(const std::string& text) {
  if (text == "algorithm1" || text == "a1") return EstimatorKind::algorithm1;
  if (text == "rr_baseline" || text == "rr") return EstimatorKind::rr_baseline;
  throw std::invalid_argument("unknown estimator '" + text +
                              "' (expected algorithm1|rr_baseline)");
}

double rmse_paper(std::span<const double> estimates, double truth) {
  return std::sqrt(sum_sq_err(estimates, truth));
}

double rmse_mean(std::span<const double> estimates, double truth) {
  if (estimates.empty()) return 0.0;
  return std::sqrt(sum_sq_err(estimates, truth) /
                   static_cast<double>(estimates.size()));
}

double rel_rmse_paper(std::span<const double> estimates, double truth) {
  if (truth == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return rmse_paper(estimates, truth) / truth;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (config.n_values.empty()) {
    throw std::invalid_argument("n list must not be empty");
  }
  if (config.epsilons.empty()) {
    throw std::invalid_argument("epsilon list must not be empty");
  }
  if (config.estimators.empty()) {
    throw std::invalid_argument("estimator list must not be empty");
  }
  const GraphletPattern pattern = parse_pattern(config.pattern_spec);

  ExperimentReport report;
  report.config = config;

  std::vector<int> ns = config.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<double> epsilons = config.epsilons;
  std::sort(epsilons.begin(), epsilons.end());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()),
                 epsilons.end());

  for (int n : ns) {
    const double cost = estimation_cost(n, pattern);
    if (!config.slow && cost > kWorkGuard) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "n=%d pattern=%s skipped: estimated work %.3g exceeds "
                    "%.1g (rerun with slow mode)",
                    n, pattern.label().c_str(), cost, kWorkGuard);
      report.skipped.emplace_back(buf);
      continue;
    }

    GeneratorSpec gen;
    gen.model = config.model;
    gen.n = n;
    gen.p_in = config.p_in;
    gen.p_out = config.p_out;
    gen.m = config.ba_m > 0 ? config.ba_m : default_ba_attachment(n);

    const std::uint64_t graph_seed =
        rng::derive_seed(config.master_seed, 'G', n);
    Graph shared_graph(1);
    double shared_truth = 0.0;
    if (!config.fresh_graph_per_trial) {
      gen.seed = graph_seed;
      shared_graph = generate(gen);
      shared_truth = exact_count(shared_graph, pattern).as_double();
    }

    for (double eps : epsilons) {
      const PrivacyBudget budget(eps);
      const auto eps_tag = std::bit_cast<std::uint64_t>(eps);
      for (EstimatorKind kind : config.estimators) {
        CellReport cell;
        cell.n = n;
        cell.epsilon = eps;
        cell.estimator = kind;
        cell.graph_seed = graph_seed;
        double truth_total = 0.0;
        for (int t = 0; t < config.trials; ++t) {
          const std::uint64_t trial_seed = rng::derive_seed(
              config.master_seed, 'T', n, eps_tag, seed_tag(kind), t);
          const Graph* g = &shared_graph;
          Graph fresh(1);
          double truth = shared_truth;
          if (config.fresh_graph_per_trial) {
            gen.seed = rng::derive_seed(graph_seed, t);
            fresh = generate(gen);
            truth = exact_count(fresh, pattern).as_double();
            g = &fresh;
          }
          truth_total += truth;
          const Estimate est =
              kind == EstimatorKind::algorithm1
                  ? algorithm1(*g, pattern, budget, trial_seed,
                               config.threads)
                  : baseline_rr(*g, pattern, budget, trial_seed);
          cell.estimates.push_back(est.value);
          cell.trial_seconds.push_back(est.elapsed_seconds);
        }
        cell.truth = truth_total / static_cast<double>(config.trials);
        cell.estimate_mean = mean_of(cell.estimates);
        cell.rmse_paper = rmse_paper(cell.estimates, cell.truth);
        cell.rmse_mean = rmse_mean(cell.estimates, cell.truth);
        cell.rel_rmse_paper = rel_rmse_paper(cell.estimates, cell.truth);
        cell.mean_trial_seconds = mean_of(cell.trial_seconds);
        double var = 0.0;
        for (double e : cell.estimates) {
          var += (e - cell.estimate_mean) * (e - cell.estimate_mean);
        }
        cell.std_dev =
            config.trials > 1
                ? std::sqrt(var / static_cast<double>(config.trials - 1))
                : 0.0;
        report.cells.push_back(std::move(cell));
      }
    }
  }

  std::sort(report.cells.begin(), report.cells.end(),
            [](const CellReport& a, const CellReport& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
              return static_cast<int>(a.estimator) <
                     static_cast<int>(b.estimator);
            });
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out =
      "model,n,epsilon,pattern,estimator,trial_count,truth,estimate_mean,"
      "rmse_paper,rmse_mean,rel_rmse_paper,std_dev,mean_trial_seconds,seed\n";
  const std::string model = to_string(report.config.model);
  const std::string pattern = parse_pattern(report.config.pattern_spec).label();
  for (const CellReport& cell : report.cells) {
    char head[160];
    std::snprintf(head, sizeof head, "%s,%d,%s,%s,%s,%d,", model.c_str(),
                  cell.n, fmt_double(cell.epsilon).c_str(), pattern.c_str(),
                  to_string(cell.estimator).c_str(),
                  static_cast<int>(cell.estimates.size()));
    out += head;
    out += fmt_double(cell.truth) + ',' + fmt_double(cell.estimate_mean) +
           ',' + fmt_double(cell.rmse_paper) + ',' +
           fmt_double(cell.rmse_mean) + ',' +
           fmt_double(cell.rel_rmse_paper) + ',' + fmt_double(cell.std_dev) +
           ',' + fmt_double(cell.mean_trial_seconds) + ',' +
           std::to_string(report.config.master_seed) + '\n';
  }
  return out;
}

std::string raw_estimates_csv(const ExperimentReport& report) {
  std::string out = "model,n,epsilon,pattern,estimator,trial,estimate,seed\n";
  const std::string model = to_string(report.config.model);
  const std::string pattern = parse_pattern(report.config.pattern_spec).label();
  for (const CellReport& cell : report.cells) {
    for (std::size_t t = 0; t < cell.estimates.size(); ++t) {
      char head[160];
      std::snprintf(head, sizeof head, "%s,%d,%s,%s,%s,%zu,", model.c_str(),
                    cell.n, fmt_double(cell.epsilon).c_str(), pattern.c_str(),
                    to_string(cell.estimator).c_str(), t);
      out += head;
      out += fmt_double(cell.estimates[t]) + ',' +
             std::to_string(report.config.master_seed) + '\n';
    }
  }
  return out;
}

double fit_loglog_slope(std::span<const double> xs,
                        std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("slope fit needs matching vector lengths");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0) continue;
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) {
    throw std::invalid_argument("slope fit needs at least two positive pairs");
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("slope fit needs distinct x values");
  }
  return (count * sxy - sy * sx) / denom;
}

}  // namespace gldp
