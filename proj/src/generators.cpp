#include "gldp/generators.hpp"

#include <random>
#include <stdexcept>

#include "gldp/rng.hpp"

namespace gldp {

std::string to_string(GeneratorModel model) {
  return model == GeneratorModel::sbm2 ? "sbm2" : "ba";
}

GeneratorModel parse_generator_model(const std::string& name) {
  if (name == "sbm2") return GeneratorModel::sbm2;
  if (name == "ba") return GeneratorModel::ba;
  throw std::invalid_argument("unknown generator model: " + name);
}

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

}  // namespace

Graph generate_sbm2(int n, double p_in, double p_out, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("sbm2 requires an even node count >= 2, got " +
                                std::to_string(n));
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");

  Graph g(n);
  const int half = n / 2;
  std::mt19937_64 gen(rng::mix64(seed));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same_block = (i < half) == (j < half);
      const double p = same_block ? p_in : p_out;
      if (rng::to_unit(gen()) < p) g.add_edge(i, j);
    }
  }
  return g;
}

Graph generate_ba(int n, int m, std::uint64_t seed) {
  if (m < 1 || m >= n)
    throw std::invalid_argument("ba requires 1 <= m < n, got m = " +
                                std::to_string(m) + ", n = " + std::to_string(n));

  Graph g(n);
  std::mt19937_64 gen(rng::mix64(seed));
  std::vector<int> degree(n, 0);
  // One entry per unit of degree; uniform draws from this give
  // degree-proportional selection.
  std::vector<int> degree_pool;

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      g.add_edge(i, j);
      ++degree[i];
      ++degree[j];
      degree_pool.push_back(i);
      degree_pool.push_back(j);
    }

  std::vector<int> targets;
  std::vector<char> picked(n, 0);
  for (int v = m; v < n; ++v) {
    targets.clear();
    // Degrees are frozen while v picks its m targets.
    const std::size_t pool_size = degree_pool.size();
    if (pool_size == 0) {
      // All-zero degrees (single-node seed): fall back to a uniform pick.
      targets.push_back(
          static_cast<int>(rng::bounded([&] { return gen(); }, v)));
    } else {
      while (static_cast<int>(targets.size()) < m) {
        const int candidate =
            degree_pool[rng::bounded([&] { return gen(); }, pool_size)];
        if (!picked[candidate]) {
          picked[candidate] = 1;
          targets.push_back(candidate);
        }
      }
    }
    for (int t : targets) {
      picked[t] = 0;
      g.add_edge(v, t);
      ++degree[v];
      ++degree[t];
      degree_pool.push_back(v);
      degree_pool.push_back(t);
    }
  }
  return g;
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case GeneratorModel::sbm2:
      return generate_sbm2(spec.n, spec.p_in, spec.p_out, spec.seed);
    case GeneratorModel::ba:
      return generate_ba(spec.n, spec.m, spec.seed);
  }
  throw std::invalid_argument("unknown generator model");
}

int default_ba_attachment(int n) { return n >= 5 ? n / 5 : 1; }

}  // namespace gldp
