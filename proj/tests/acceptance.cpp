// Acceptance gate: every release-blocking behavior of the library and CLI,
// one pass/fail line each. Exits non-zero if any check fails.
//
// Usage: acceptance [--cli PATH] [--slow]
//   --cli PATH  path to the command-line binary (default ./graphlet-ldp),
//               used by the determinism check
//   --slow      additionally run the large-grid comparison (minutes) and
//               print its observations; informative only, never gating

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gldp/estimator.hpp"
#include "gldp/experiment.hpp"
#include "gldp/gadgets.hpp"
#include "gldp/generators.hpp"
#include "gldp/ldp.hpp"
#include "gldp/oracle.hpp"
#include "gldp/pattern.hpp"
#include "gldp/rng.hpp"
#include "oracle_ref.hpp"

using namespace gldp;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  if (!pass) ++failures;
  std::printf("%s - %d: %s (%s) [%.1fs]\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
}

void run(int number, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& check) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = check();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  report(number, name, pass, detail, elapsed.count());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// 1. Zero-noise channel: the estimator must reproduce the exact count.
std::pair<bool, std::string> check_noiseless_equivalence() {
  const std::vector<GraphletPattern> patterns{
      preset_triangle(), preset_cycle(4), preset_clique(4), preset_path(4),
      preset_star(4)};
  int checked = 0, mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 4;  // 4..7
    const Graph g = testref::random_graph(n, 31000 + trial, 0.5);
    const UnbiasedAdjacency exact = UnbiasedAdjacency::noiseless(g);
    for (const auto& pattern : patterns) {
      const double est = estimate_from_unbiased(exact, pattern);
      const double truth = exact_count(g, pattern).as_double();
      ++checked;
      if (std::llround(est) != std::llround(truth) ||
          std::abs(est - truth) > 1e-6 * std::max(1.0, truth)) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " graph/pattern cases, " +
                               std::to_string(mismatches) + " mismatches"};
}

// 2. Mean over many noise draws converges to the truth.
std::pair<bool, std::string> check_unbiasedness() {
  // Seed picked (first one scanned) so the 8-node graph has a positive
  // four-cycle count; the check itself is seed-agnostic.
  const std::uint64_t graph_seed = 6;
  const Graph g = generate_sbm2(8, 0.25, 0.05, graph_seed);
  const GraphletPattern pattern = preset_cycle(4);
  const double truth = exact_count(g, pattern).as_double();
  const PrivacyBudget budget(1.0);
  const int trials = 20000;
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double est =
        algorithm1(g, pattern, budget, rng::derive_seed(77, t)).value;
    sum += est;
    sum_sq += est * est;
  }
  const double mean = sum / trials;
  const double var = (sum_sq - trials * mean * mean) / (trials - 1);
  const double bound = 4.0 * std::sqrt(var / trials);
  const bool pass = std::abs(mean - truth) <= bound && truth > 0.0;
  return {pass, "truth " + fmt(truth) + ", mean " + fmt(mean) +
                    ", |diff| " + fmt(std::abs(mean - truth)) +
                    " <= " + fmt(bound)};
}

// 3. The reverse channel inverts the forward channel exactly.
std::pair<bool, std::string> check_debias_identity() {
  double worst = 0.0;
  for (double eps : {0.1, 1.0, 5.0, 20.0}) {
    const PrivacyBudget b(eps);
    const double for_one = b.keep_probability() * b.debias_high() +
                           b.flip_probability() * b.debias_low();
    const double for_zero = b.flip_probability() * b.debias_high() +
                            b.keep_probability() * b.debias_low();
    worst = std::max(worst, std::abs(for_one - 1.0));
    worst = std::max(worst, std::abs(for_zero - 0.0));
  }
  return {worst <= 1e-12, "max deviation " + fmt(worst)};
}

// 4. Symmetry counts, and ordered-tuple count == symmetries x copy count.
std::pair<bool, std::string> check_symmetry_table() {
  const bool table_ok = preset_triangle().automorphism_count() == 6 &&
                        preset_cycle(4).automorphism_count() == 8 &&
                        preset_clique(4).automorphism_count() == 24 &&
                        preset_path(4).automorphism_count() == 2 &&
                        preset_star(4).automorphism_count() == 6;
  int bad = 0;
  for (int c = 0; c < 500; ++c) {
    const int n = 3 + c % 5;  // 3..7
    const int k = 2 + c % 4;  // 2..5
    const Graph g = testref::random_graph(n, 91000 + c);
    const GraphletPattern pattern = testref::random_pattern(k, 4500 + c);
    const auto w = tuple_count_W(g, pattern).value;
    const auto copies = static_cast<unsigned __int128>(
        testref::ref_copy_count(g, pattern));
    const auto a =
        static_cast<unsigned __int128>(pattern.automorphism_count());
    if (w != a * copies) ++bad;
    if (exact_count(g, pattern).value != copies) ++bad;
  }
  return {table_ok && bad == 0,
          std::string("fixed table ") + (table_ok ? "ok" : "WRONG") +
              ", 500 random cases, " + std::to_string(bad) + " mismatches"};
}

// 5. Accuracy sweep: the debiased estimator beats the plain noisy count, and
// its error grows polynomially with the expected exponent.
//
// The slope gate is expected to fail at these settings: with eps = 1 and
// n <= 60 the estimator's variance is dominated by products of pure-noise
// edge values, whose total grows ~n^(k/2) per placement count, so measured
// RMSE growth sits near exponent 2.2, not the asymptotic k-1 = 3. The
// n^(k-1) regime is measurable at this scale only under a larger budget
// (the eps = 5 slope is printed as context). The window is kept as pinned
// rather than widened to fit; see README "Known acceptance deviations".
std::pair<bool, std::string> check_sweep_trend() {
  ExperimentConfig config;
  config.model = GeneratorModel::sbm2;
  config.pattern_spec = "cycle:4";
  config.epsilons = {1.0};
  config.n_values = {10, 20, 30, 40, 50, 60};
  config.trials = 10;
  config.master_seed = 20240817;
  const ExperimentReport report = run_experiment(config);

  std::vector<double> ns, alg_rmse;
  int wins = 0, points = 0;
  std::string cmp;
  for (int n : config.n_values) {
    double a1 = -1.0, rr = -1.0;
    for (const auto& cell : report.cells) {
      if (cell.n != n) continue;
      (cell.estimator == EstimatorKind::algorithm1 ? a1 : rr) =
          cell.rmse_paper;
    }
    ns.push_back(n);
    alg_rmse.push_back(a1);
    if (n >= 20) {
      ++points;
      if (a1 < rr) ++wins;
      cmp += (cmp.empty() ? "" : " ") + std::to_string(n) +
             (a1 < rr ? ":win" : ":loss");
    }
  }
  const double slope = fit_loglog_slope(ns, alg_rmse);

  ExperimentConfig high = config;
  high.epsilons = {5.0};
  high.estimators = {EstimatorKind::algorithm1};
  const ExperimentReport high_report = run_experiment(high);
  std::vector<double> high_rmse;
  for (const auto& cell : high_report.cells)
    high_rmse.push_back(cell.rmse_paper);
  const double high_slope = fit_loglog_slope(ns, high_rmse);

  const bool wins_ok = wins >= 4 && points == 5;
  const bool slope_ok = slope >= 2.3 && slope <= 3.7;
  return {wins_ok && slope_ok,
          std::to_string(wins) + "/5 grid points better (" + cmp + ") [" +
              (wins_ok ? "ok" : "BAD") + "]; error-growth slope " +
              fmt(slope) + " vs window [2.3, 3.7] [" +
              (slope_ok ? "ok" : "out: noise-product regime, eps=5 slope " +
                                     fmt(high_slope) + " is in window") +
              "]"};
}

// 6. Relative error at a moderate size and generous budget is small. The
// 0.1 threshold lives in per-trial units (root of the MEAN squared error
// over the 10 trials, divided by the truth); the sum-form value is printed
// alongside for reference.
std::pair<bool, std::string> check_relative_error() {
  ExperimentConfig config;
  config.model = GeneratorModel::sbm2;
  config.pattern_spec = "cycle:4";
  config.epsilons = {5.0};
  config.n_values = {60};
  config.trials = 10;
  config.master_seed = 20240817;
  config.estimators = {EstimatorKind::algorithm1};
  const ExperimentReport report = run_experiment(config);
  if (report.cells.size() != 1) return {false, "expected one cell"};
  const auto& cell = report.cells[0];
  const double rel_trial = cell.rmse_mean / cell.truth;
  return {rel_trial < 0.1,
          "per-trial relative error " + fmt(rel_trial) + " < 0.1 (sum-form " +
              fmt(cell.rel_rmse_paper) + ", truth " + fmt(cell.truth) + ")"};
}

// 7. Clique count of the layered construction factors through the
// triangle count of its three-part core.
std::pair<bool, std::string> check_clique_factorization() {
  int bad = 0, cases = 0;
  for (int n : {6, 9}) {
    const int third = n / 3;
    for (int k : {4, 5}) {
      for (int c = 0; c < 50; ++c) {
        const std::uint64_t seed =
            rng::derive_seed(88, n, k, c);
        const auto result = clique_lemma_check(
            k, n, random_bits(third, rng::derive_seed(seed, 1)),
            random_bits(third, rng::derive_seed(seed, 2)),
            random_bit_matrix(third, third, rng::derive_seed(seed, 3)));
        ++cases;
        if (!result.ok) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(cases) + " random instances, " +
                        std::to_string(bad) + " mismatches"};
}

// 8. Cycle counts of the near-complete construction expand binomially and
// respect the pairwise difference bound.
std::pair<bool, std::string> check_cycle_structure() {
  const auto report = cycle_structure_check(8, 4, 100, 424242);
  const bool pass = report.formula_holds && report.difference_bound_holds;
  std::string cps;
  for (const auto& c : report.cp) cps += (cps.empty() ? "" : ",") + c.str();
  return {pass, "expansion " +
                    std::string(report.formula_holds ? "exact" : "BROKEN") +
                    " for weights 0..4 (base " + report.base_count.str() +
                    ", per-subset counts " + cps + "), difference bound " +
                    (report.difference_bound_holds ? "holds" : "VIOLATED") +
                    " on 100 pairs"};
}

// 9. The experiment subcommand is deterministic apart from timings.
std::pair<bool, std::string> check_cli_determinism(const std::string& cli) {
  const std::string args =
      " experiment --model sbm2 --pattern cycle:4 --epsilon-list 1,5"
      " --n-list 10,20,30 --trials 5 --seed 7";
  const std::string out1 = "acceptance_run1.csv";
  const std::string out2 = "acceptance_run2.csv";
  const std::string raw1 = "acceptance_run1_raw.csv";
  const std::string raw2 = "acceptance_run2_raw.csv";
  const auto run_once = [&](const std::string& out, const std::string& raw) {
    const std::string cmd =
        cli + args + " --out " + out + " --raw-out " + raw + " 2>/dev/null";
    return std::system(cmd.c_str());
  };
  const int rc1 = run_once(out1, raw1);
  const int rc2 = run_once(out2, raw2);
  if (rc1 != 0 || rc2 != 0) {
    return {false, "CLI runs failed (" + cli + "), codes " +
                       std::to_string(rc1) + "/" + std::to_string(rc2)};
  }
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const auto strip_timing = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      std::vector<std::string> cols;
      std::string col;
      std::istringstream fields(line);
      while (std::getline(fields, col, ',')) cols.push_back(col);
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i == 12) continue;  // mean_trial_seconds
        out += cols[i];
        out += i + 1 == cols.size() ? '\n' : ',';
      }
    }
    return out;
  };
  const std::string a = slurp(out1), b = slurp(out2);
  const std::string ra = slurp(raw1), rb = slurp(raw2);
  const bool files_ok = !a.empty() && !ra.empty();
  const bool pass =
      files_ok && strip_timing(a) == strip_timing(b) && ra == rb;
  for (const auto& p : {out1, out2, raw1, raw2}) std::remove(p.c_str());
  return {pass, files_ok ? "aggregate CSVs identical modulo the timing "
                           "column; raw CSVs byte-identical"
                         : "CSV outputs missing"};
}

// --slow extra: the published large-grid observations, for information only.
void slow_extras() {
  std::printf("-- slow extras (informative, not gating) --\n");
  ExperimentConfig config;
  config.model = GeneratorModel::sbm2;
  config.pattern_spec = "cycle:4";
  config.epsilons = {1.0, 5.0};
  config.n_values = {100};
  config.trials = 10;
  config.master_seed = 20240817;
  const auto start = std::chrono::steady_clock::now();
  const ExperimentReport report = run_experiment(config);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  double a1_eps1 = 0, rr_eps1 = 0, rel_eps5 = 0;
  for (const auto& cell : report.cells) {
    if (cell.epsilon == 1.0 && cell.estimator == EstimatorKind::algorithm1)
      a1_eps1 = cell.rmse_paper;
    if (cell.epsilon == 1.0 && cell.estimator == EstimatorKind::rr_baseline)
      rr_eps1 = cell.rmse_paper;
    if (cell.epsilon == 5.0 && cell.estimator == EstimatorKind::algorithm1)
      rel_eps5 = cell.rmse_mean / cell.truth;
  }
  std::printf(
      "  n=100 eps=1: debiased rmse %.6g vs plain %.6g -> %.1fx improvement "
      "(reference: ~36x)\n",
      a1_eps1, rr_eps1, rr_eps1 / a1_eps1);
  std::printf(
      "  n=100 eps=5: per-trial relative error %.6g (reference: < 0.03)\n",
      rel_eps5);
  std::printf("  grid wall time %.1fs\n", elapsed.count());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = "./graphlet-ldp";
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--slow") {
      slow = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--cli PATH] [--slow]\n");
      return 2;
    }
  }

  run(1, "zero-noise estimate equals the exact count",
      check_noiseless_equivalence);
  run(2, "estimates are unbiased over 20000 noise draws", check_unbiasedness);
  run(3, "reverse channel inverts the flip channel to 1e-12",
      check_debias_identity);
  run(4, "symmetry counts and tuple/copy identity", check_symmetry_table);
  run(5, "debiased beats plain noisy counting and error grows as expected",
      check_sweep_trend);
  run(6, "relative error small at n=60 under a generous budget",
      check_relative_error);
  run(7, "layered clique construction factors through its core",
      check_clique_factorization);
  run(8, "near-complete construction: expansion and difference bound",
      check_cycle_structure);
  run(9, "experiment subcommand deterministic modulo timings",
      [&] { return check_cli_determinism(cli); });

  if (slow) slow_extras();

  if (failures == 0) {
    std::printf("all 9 checks passed\n");
    return 0;
  }
  std::printf("%d check(s) FAILED\n", failures);
  return 1;
}
