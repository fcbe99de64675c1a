// Command-line front end: synthetic graph generation, exact counting,
// private estimation, sweep experiments, and the lower-bound constructions.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gldp/estimator.hpp"
#include "gldp/experiment.hpp"
#include "gldp/gadgets.hpp"
#include "gldp/generators.hpp"
#include "gldp/graph.hpp"
#include "gldp/ldp.hpp"
#include "gldp/oracle.hpp"
#include "gldp/pattern.hpp"
#include "gldp/rng.hpp"

namespace {

constexpr double kWorkGuard = 1e10;

gldp::BitVector parse_bits(std::string text, std::size_t expected,
                           const std::string& what) {
  std::erase_if(text, [](char c) { return c == ',' || c == ' '; });
  if (text.size() != expected) {
    throw std::invalid_argument(what + " must have " +
                                std::to_string(expected) + " bits");
  }
  gldp::BitVector bits(expected);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument(what + " must contain only 0/1 characters");
    }
    bits[i] = text[i] == '1';
  }
  return bits;
}

gldp::BitMatrix parse_bit_matrix(const std::string& text, int side,
                                 const std::string& what) {
  const gldp::BitVector flat = parse_bits(
      text, static_cast<std::size_t>(side) * static_cast<std::size_t>(side),
      what);
  gldp::BitMatrix m(static_cast<std::size_t>(side));
  for (int r = 0; r < side; ++r) {
    auto& row = m[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(side));
    for (int c = 0; c < side; ++c) {
      row[static_cast<std::size_t>(c)] =
          flat[static_cast<std::size_t>(r * side + c)];
    }
  }
  return m;
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << text;
}

void guard_scale(int n, const gldp::GraphletPattern& pattern, bool slow) {
  const double cost = gldp::estimation_cost(n, pattern);
  if (!slow && cost > kWorkGuard) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "n=%d with pattern %s needs about %.3g placement visits; "
                  "pass --slow to run anyway",
                  n, pattern.label().c_str(), cost);
    throw gldp::ScaleError(buf);
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphlet counting under edge-local differential privacy"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen_cmd = app.add_subcommand(
      "generate", "emit a synthetic graph as an edge-list file");
  std::string gen_model = "sbm2";
  int gen_n = 0;
  double gen_p_in = 0.25, gen_p_out = 0.05;
  int gen_m = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-";
  gen_cmd->add_option("--model", gen_model, "sbm2 or ba")->required();
  gen_cmd->add_option("--n", gen_n, "node count")->required();
  gen_cmd->add_option("--p-in", gen_p_in, "sbm2 intra-block edge probability");
  gen_cmd->add_option("--p-out", gen_p_out,
                      "sbm2 inter-block edge probability");
  gen_cmd->add_option("--m", gen_m,
                      "ba attachment count (default max(1, n/5))");
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "output path ('-' for stdout)");

  // ---- count ----
  auto* count_cmd =
      app.add_subcommand("count", "exact copy count of a pattern in a graph");
  std::string count_graph, count_pattern;
  bool count_slow = false;
  count_cmd->add_option("--graph", count_graph, "edge-list file")->required();
  count_cmd
      ->add_option("--pattern", count_pattern,
                   "triangle|cycle:K|clique:K|star:K|path:K|file:PATH")
      ->required();
  count_cmd->add_flag("--slow", count_slow, "lift the work guard");

  // ---- estimate ----
  auto* est_cmd = app.add_subcommand(
      "estimate", "one private estimate of a pattern count");
  std::string est_graph, est_pattern, est_dump;
  double est_epsilon = 0.0;
  std::uint64_t est_seed = 0;
  bool est_baseline = false, est_clamp = false, est_slow = false;
  int est_threads = 1;
  est_cmd->add_option("--graph", est_graph, "edge-list file")->required();
  est_cmd->add_option("--pattern", est_pattern, "pattern spec")->required();
  est_cmd->add_option("--epsilon", est_epsilon, "privacy budget")->required();
  est_cmd->add_option("--seed", est_seed, "randomization seed");
  est_cmd->add_flag("--baseline", est_baseline,
                    "count the noisy graph directly instead of debiasing");
  est_cmd->add_option("--dump-noisy", est_dump,
                      "also write the randomized adjacency matrix here");
  est_cmd->add_flag("--clamp-at-zero", est_clamp,
                    "report max(0, estimate) instead of the raw value");
  est_cmd->add_option("--threads", est_threads, "worker threads");
  est_cmd->add_flag("--slow", est_slow, "lift the work guard");

  // ---- experiment ----
  auto* exp_cmd = app.add_subcommand(
      "experiment", "accuracy sweep over n and epsilon; writes CSV");
  std::string exp_model = "sbm2", exp_pattern = "cycle:4";
  double exp_p_in = 0.25, exp_p_out = 0.05;
  int exp_m = 0, exp_trials = 10, exp_threads = 1;
  std::vector<double> exp_epsilons{1.0, 5.0};
  std::vector<int> exp_ns;
  std::uint64_t exp_seed = 0;
  std::string exp_out, exp_raw_out;
  std::vector<std::string> exp_estimators{"algorithm1", "rr_baseline"};
  bool exp_fresh = false, exp_slow = false;
  exp_cmd->add_option("--model", exp_model, "sbm2 or ba");
  exp_cmd->add_option("--p-in", exp_p_in, "sbm2 intra-block edge probability");
  exp_cmd->add_option("--p-out", exp_p_out,
                      "sbm2 inter-block edge probability");
  exp_cmd->add_option("--m", exp_m, "ba attachment count (0: max(1, n/5))");
  exp_cmd->add_option("--pattern", exp_pattern, "pattern spec");
  exp_cmd->add_option("--epsilon-list", exp_epsilons, "privacy budgets")
      ->delimiter(',');
  exp_cmd->add_option("--n-list", exp_ns, "graph sizes")
      ->delimiter(',')
      ->required();
  exp_cmd->add_option("--trials", exp_trials, "noise re-draws per cell");
  exp_cmd->add_option("--seed", exp_seed, "master seed");
  exp_cmd->add_option("--out", exp_out, "CSV path ('-' for stdout)")
      ->required();
  exp_cmd->add_option("--raw-out", exp_raw_out,
                      "also write per-trial estimates here");
  exp_cmd->add_option("--estimators", exp_estimators,
                      "subset of algorithm1(a1),rr_baseline(rr)")
      ->delimiter(',');
  exp_cmd->add_flag("--fresh-graph-per-trial", exp_fresh,
                    "re-draw the graph every trial instead of once per n");
  exp_cmd->add_flag("--slow", exp_slow, "run cells beyond the work guard");
  exp_cmd->add_option("--threads", exp_threads, "worker threads");

  // ---- gadget ----
  auto* gadget_cmd = app.add_subcommand(
      "gadget", "emit a lower-bound construction as an edge-list file");
  gadget_cmd->require_subcommand(1);

  auto* gtri = gadget_cmd->add_subcommand(
      "triangle", "tripartite construction on n nodes (3 | n)");
  int gtri_n = 0;
  std::string gtri_mu, gtri_upsilon, gtri_x, gtri_out = "-";
  std::uint64_t gtri_seed = 0;
  gtri->add_option("--n", gtri_n, "node count (divisible by 3)")->required();
  gtri->add_option("--mu", gtri_mu, "n/3 bits (default: random from --seed)");
  gtri->add_option("--upsilon", gtri_upsilon, "n/3 bits");
  gtri->add_option("--x", gtri_x, "n/3 x n/3 bits, row-major");
  gtri->add_option("--seed", gtri_seed, "seed for any omitted bit blocks");
  gtri->add_option("--out", gtri_out, "output path ('-' for stdout)");

  auto* gcli = gadget_cmd->add_subcommand(
      "clique", "k-part construction on k*n/3 nodes");
  int gcli_k = 4, gcli_n = 0;
  std::string gcli_mu, gcli_upsilon, gcli_x, gcli_out = "-";
  std::uint64_t gcli_seed = 0;
  gcli->add_option("--k", gcli_k, "clique size (>= 3)")->required();
  gcli->add_option("--n", gcli_n, "base size (divisible by 3)")->required();
  gcli->add_option("--mu", gcli_mu, "n/3 bits (default: random from --seed)");
  gcli->add_option("--upsilon", gcli_upsilon, "n/3 bits");
  gcli->add_option("--x", gcli_x, "n/3 x n/3 bits, row-major");
  gcli->add_option("--seed", gcli_seed, "seed for any omitted bit blocks");
  gcli->add_option("--out", gcli_out, "output path ('-' for stdout)");

  auto* gcyc = gadget_cmd->add_subcommand(
      "cycle", "near-complete construction on n nodes (n even)");
  int gcyc_n = 0;
  std::string gcyc_x, gcyc_out = "-";
  std::uint64_t gcyc_seed = 0;
  gcyc->add_option("--n", gcyc_n, "node count (even)")->required();
  gcyc->add_option("--x", gcyc_x,
                   "n/2 bits choosing restored matched pairs (default: "
                   "random from --seed)");
  gcyc->add_option("--seed", gcyc_seed, "seed when --x is omitted");
  gcyc->add_option("--out", gcyc_out, "output path ('-' for stdout)");

  // ---- gadget-check ----
  auto* check_cmd = app.add_subcommand(
      "gadget-check", "verify the structural identities of the constructions");
  check_cmd->require_subcommand(1);

  auto* ccli = check_cmd->add_subcommand(
      "clique-lemma",
      "k-clique count == triangle count * (n/3)^(k-3) on random instances");
  int ccli_k = 4, ccli_n = 6, ccli_cases = 50;
  std::uint64_t ccli_seed = 0;
  bool ccli_slow = false;
  ccli->add_option("--k", ccli_k, "clique size (>= 3)");
  ccli->add_option("--n", ccli_n, "base size (divisible by 3)");
  ccli->add_option("--cases", ccli_cases, "random instances to test");
  ccli->add_option("--seed", ccli_seed, "seed for the random instances");
  ccli->add_flag("--slow", ccli_slow, "lift the k <= 5, n <= 9 guard");

  auto* ccyc = check_cmd->add_subcommand(
      "cycle-structure",
      "binomial count expansion and pairwise difference bound");
  int ccyc_n = 8, ccyc_k = 4, ccyc_pairs = 100;
  std::uint64_t ccyc_seed = 0;
  bool ccyc_slow = false;
  ccyc->add_option("--n", ccyc_n, "node count (even)");
  ccyc->add_option("--k", ccyc_k, "cycle length");
  ccyc->add_option("--pairs", ccyc_pairs, "sampled vector pairs for the bound");
  ccyc->add_option("--seed", ccyc_seed, "sampling seed");
  ccyc->add_flag("--slow", ccyc_slow, "lift the n <= 10, k <= 5 guard");

  try {
    app.parse(argc, argv);

    if (gen_cmd->parsed()) {
      gldp::GeneratorSpec spec;
      spec.model = gldp::parse_generator_model(gen_model);
      spec.n = gen_n;
      spec.p_in = gen_p_in;
      spec.p_out = gen_p_out;
      spec.m = gen_m > 0 ? gen_m : gldp::default_ba_attachment(gen_n);
      spec.seed = gen_seed;
      write_text_file(gen_out, gldp::write_edge_list(gldp::generate(spec)));
      return 0;
    }

    if (count_cmd->parsed()) {
      const gldp::Graph g = gldp::load_graph_file(count_graph);
      const gldp::GraphletPattern pattern = gldp::parse_pattern(count_pattern);
      guard_scale(g.node_count(), pattern, count_slow);
      std::cout << gldp::exact_count(g, pattern) << '\n';
      return 0;
    }

    if (est_cmd->parsed()) {
      const gldp::Graph g = gldp::load_graph_file(est_graph);
      const gldp::GraphletPattern pattern = gldp::parse_pattern(est_pattern);
      guard_scale(g.node_count(), pattern, est_slow);
      const gldp::PrivacyBudget budget(est_epsilon);
      const gldp::NoisyAdjacency noisy = gldp::obfuscate(g, budget, est_seed);
      if (!est_dump.empty()) {
        std::ofstream dump(est_dump, std::ios::binary);
        if (!dump) {
          throw std::invalid_argument("cannot open for writing: " + est_dump);
        }
        gldp::write_noisy(dump, noisy);
      }
      double value =
          est_baseline
              ? gldp::baseline_rr_count(noisy, pattern)
              : gldp::estimate_from_unbiased(gldp::debias(noisy, budget),
                                             pattern, est_threads);
      if (est_clamp) value = std::max(0.0, value);
      std::cout << fmt(value) << '\n';
      return 0;
    }

    if (exp_cmd->parsed()) {
      gldp::ExperimentConfig config;
      config.model = gldp::parse_generator_model(exp_model);
      config.p_in = exp_p_in;
      config.p_out = exp_p_out;
      config.ba_m = exp_m;
      config.pattern_spec = exp_pattern;
      config.epsilons = exp_epsilons;
      config.n_values = exp_ns;
      config.trials = exp_trials;
      config.master_seed = exp_seed;
      config.estimators.clear();
      for (const auto& name : exp_estimators) {
        config.estimators.push_back(gldp::parse_estimator_kind(name));
      }
      config.fresh_graph_per_trial = exp_fresh;
      config.slow = exp_slow;
      config.threads = exp_threads;
      config.out_path = exp_out;

      const gldp::ExperimentReport report = gldp::run_experiment(config);
      write_text_file(exp_out, gldp::to_csv(report));
      if (!exp_raw_out.empty()) {
        write_text_file(exp_raw_out, gldp::raw_estimates_csv(report));
      }
      for (const auto& note : report.skipped) {
        std::cerr << "skipped: " << note << '\n';
      }
      if (exp_out != "-") {
        std::cerr << report.cells.size() << " rows -> " << exp_out << '\n';
      }
      return 0;
    }

    if (gadget_cmd->parsed()) {
      if (gtri->parsed() || gcli->parsed()) {
        const bool is_clique = gcli->parsed();
        const int k = is_clique ? gcli_k : 3;
        const int n = is_clique ? gcli_n : gtri_n;
        const std::string& mu_text = is_clique ? gcli_mu : gtri_mu;
        const std::string& up_text = is_clique ? gcli_upsilon : gtri_upsilon;
        const std::string& x_text = is_clique ? gcli_x : gtri_x;
        const std::uint64_t seed = is_clique ? gcli_seed : gtri_seed;
        const std::string& out = is_clique ? gcli_out : gtri_out;
        if (n < 3 || n % 3 != 0) {
          throw std::invalid_argument("--n must be a positive multiple of 3");
        }
        const int third = n / 3;
        const auto flat = static_cast<std::size_t>(third);
        const gldp::BitVector mu =
            mu_text.empty() ? gldp::random_bits(third,
                                                gldp::rng::derive_seed(seed, 1))
                            : parse_bits(mu_text, flat, "--mu");
        const gldp::BitVector upsilon =
            up_text.empty() ? gldp::random_bits(third,
                                                gldp::rng::derive_seed(seed, 2))
                            : parse_bits(up_text, flat, "--upsilon");
        const gldp::BitMatrix X =
            x_text.empty()
                ? gldp::random_bit_matrix(third, third,
                                          gldp::rng::derive_seed(seed, 3))
                : parse_bit_matrix(x_text, third, "--x");
        const gldp::Graph g = gldp::build_clique_gadget(k, n, mu, upsilon, X);
        write_text_file(out, gldp::write_edge_list(g));
        return 0;
      }
      if (gcyc->parsed()) {
        if (gcyc_n < 2 || gcyc_n % 2 != 0) {
          throw std::invalid_argument("--n must be a positive even number");
        }
        const int half = gcyc_n / 2;
        const gldp::BitVector x =
            gcyc_x.empty()
                ? gldp::random_bits(half, gldp::rng::derive_seed(gcyc_seed, 4))
                : parse_bits(gcyc_x, static_cast<std::size_t>(half), "--x");
        write_text_file(gcyc_out,
                        gldp::write_edge_list(gldp::build_cycle_gadget(gcyc_n, x)));
        return 0;
      }
    }

    if (check_cmd->parsed()) {
      if (ccli->parsed()) {
        if (ccli_n < 3 || ccli_n % 3 != 0) {
          throw std::invalid_argument("--n must be a positive multiple of 3");
        }
        const int third = ccli_n / 3;
        int failures = 0;
        for (int c = 0; c < ccli_cases; ++c) {
          const std::uint64_t cs = gldp::rng::derive_seed(ccli_seed, c);
          const auto result = gldp::clique_lemma_check(
              ccli_k, ccli_n,
              gldp::random_bits(third, gldp::rng::derive_seed(cs, 1)),
              gldp::random_bits(third, gldp::rng::derive_seed(cs, 2)),
              gldp::random_bit_matrix(third, third,
                                      gldp::rng::derive_seed(cs, 3)),
              ccli_slow);
          if (!result.ok) {
            ++failures;
            std::cerr << "case " << c << ": counted " << result.clique_count
                      << ", expected " << result.expected << '\n';
          }
        }
        std::cout << "clique-lemma k=" << ccli_k << " n=" << ccli_n << ": "
                  << (ccli_cases - failures) << '/' << ccli_cases
                  << " cases exact\n";
        return failures == 0 ? 0 : 1;
      }
      if (ccyc->parsed()) {
        const auto report = gldp::cycle_structure_check(
            ccyc_n, ccyc_k, ccyc_pairs, ccyc_seed, ccyc_slow);
        std::cout << "cycle-structure n=" << report.n << " k=" << report.k
                  << "\n  count with no matched pair: " << report.base_count
                  << '\n';
        for (std::size_t p = 0; p < report.cp.size(); ++p) {
          std::cout << "  through " << (p + 1)
                    << " fixed matched pair(s): " << report.cp[p] << '\n';
        }
        for (std::size_t w = 0; w < report.direct.size(); ++w) {
          std::cout << "  weight " << w << ": direct " << report.direct[w]
                    << ", expansion " << report.via_formula[w] << '\n';
        }
        std::cout << "  expansion exact: "
                  << (report.formula_holds ? "yes" : "NO")
                  << "\n  difference bound on " << report.sampled_pairs
                  << " pairs: "
                  << (report.difference_bound_holds ? "holds" : "VIOLATED")
                  << '\n';
        return (report.formula_holds && report.difference_bound_holds) ? 0 : 1;
      }
    }

    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gldp::ScaleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
