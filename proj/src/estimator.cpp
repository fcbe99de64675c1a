#include "gldp/estimator.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

#include "gldp/oracle.hpp"

namespace gldp {

namespace {

// Upper-triangular index over k pattern positions, a < b, k <= 8.
constexpr int tri_index(int k, int a, int b) {
  return a * k - a * (a + 1) / 2 + (b - a - 1);
}

// Placement edge lists with pair indices resolved once up front.
struct CompiledMaps {
  int k;
  // Flattened: placements separated by sentinel -1.
  std::vector<int> steps;
};

CompiledMaps compile_maps(const GraphletPattern& pattern) {
  CompiledMaps out;
  out.k = pattern.k();
  for (const auto& placement : pattern.position_edge_maps()) {
    for (const auto& [a, b] : placement) {
      out.steps.push_back(tri_index(out.k, a, b));
    }
    out.steps.push_back(-1);
  }
  return out;
}

// Sum over all k-subsets with minimum element `chunk`, visited in
// lexicographic order. Deterministic for a given chunk, which is what makes
// the threaded path reproducible: partials are computed per chunk and then
// combined in a shape that ignores which thread produced them.
double chunk_sum(const UnbiasedAdjacency& ua, const CompiledMaps& maps,
                 int chunk) {
  const int n = ua.node_count();
  const int k = maps.k;
  std::array<int, GraphletPattern::kMaxNodes> subset{};
  std::array<double, 28> vals{};  // C(8, 2) pair slots
  subset[0] = chunk;
  for (int i = 1; i < k; ++i) subset[i] = chunk + i;
  if (subset[k - 1] >= n) return 0.0;

  double total = 0.0;
  while (true) {
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        vals[static_cast<std::size_t>(tri_index(k, a, b))] =
            ua.value(subset[a], subset[b]);
      }
    }
    double product = 1.0;
    for (int step : maps.steps) {
      if (step < 0) {
        total += product;
        product = 1.0;
      } else {
        product *= vals[static_cast<std::size_t>(step)];
      }
    }
    // Advance to the next subset keeping subset[0] fixed.
    int pos = k - 1;
    while (pos >= 1 && subset[pos] == n - k + pos) --pos;
    if (pos < 1) break;
    ++subset[pos];
    for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
  return total;
}

// Pairwise tree over the partials; the shape depends only on the element
// count, never on thread scheduling.
double reduce_pairwise(std::vector<double> level) {
  if (level.empty()) return 0.0;
  while (level.size() > 1) {
    std::vector<double> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(level[i] + level[i + 1]);
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

}  // namespace

double estimate_from_unbiased(const UnbiasedAdjacency& ua,
                              const GraphletPattern& pattern, int threads) {
  const int n = ua.node_count();
  const int k = pattern.k();
  if (k > n) return 0.0;
  const CompiledMaps maps = compile_maps(pattern);
  const int chunk_count = n - k + 1;
  std::vector<double> partials(static_cast<std::size_t>(chunk_count), 0.0);

  if (threads <= 1 || chunk_count == 1) {
    for (int c = 0; c < chunk_count; ++c) partials[c] = chunk_sum(ua, maps, c);
  } else {
    std::atomic<int> next_chunk{0};
    auto worker = [&] {
      while (true) {
        const int c = next_chunk.fetch_add(1);
        if (c >= chunk_count) break;
        partials[static_cast<std::size_t>(c)] = chunk_sum(ua, maps, c);
      }
    };
    std::vector<std::thread> pool;
    const int used = std::min(threads, chunk_count);
    pool.reserve(static_cast<std::size_t>(used));
    for (int t = 0; t < used; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reduce_pairwise(std::move(partials));
}

double estimate_naive(const UnbiasedAdjacency& ua,
                      const GraphletPattern& pattern) {
  const int n = ua.node_count();
  const int k = pattern.k();
  if (k > n) return 0.0;
  const auto& edges = pattern.edges();
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  double total = 0.0;
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      double product = 1.0;
      for (const auto& [a, b] : edges) {
        product *= ua.value(tuple[static_cast<std::size_t>(a)],
                            tuple[static_cast<std::size_t>(b)]);
      }
      total += product;
      return;
    }
    for (int node = 0; node < n; ++node) {
      bool taken = false;
      for (int d = 0; d < depth; ++d) {
        if (tuple[static_cast<std::size_t>(d)] == node) {
          taken = true;
          break;
        }
      }
      if (taken) continue;
      tuple[static_cast<std::size_t>(depth)] = node;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return total / static_cast<double>(pattern.automorphism_count());
}

Estimate algorithm1(const Graph& g, const GraphletPattern& pattern,
                    const PrivacyBudget& budget, std::uint64_t seed,
                    int threads) {
  const auto start = std::chrono::steady_clock::now();
  const NoisyAdjacency noisy = obfuscate(g, budget, seed);
  const UnbiasedAdjacency ua = debias(noisy, budget);
  const double value = estimate_from_unbiased(ua, pattern, threads);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return Estimate{value,          pattern.label(), g.node_count(),
                  budget.epsilon(), seed,          elapsed.count()};
}

double baseline_rr_count(const NoisyAdjacency& noisy,
                         const GraphletPattern& pattern) {
  const Graph as_graph = Graph::from_bits(noisy.bits());
  return exact_count(as_graph, pattern).as_double();
}

Estimate baseline_rr(const Graph& g, const GraphletPattern& pattern,
                     const PrivacyBudget& budget, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const NoisyAdjacency noisy = obfuscate(g, budget, seed);
  const double value = baseline_rr_count(noisy, pattern);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return Estimate{value,          pattern.label(), g.node_count(),
                  budget.epsilon(), seed,          elapsed.count()};
}

double estimation_cost(int n, const GraphletPattern& pattern) {
  const int k = pattern.k();
  if (k > n) return 0.0;
  double subsets = 1.0;
  for (int i = 0; i < k; ++i) {
    subsets *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return subsets *
         static_cast<double>(pattern.position_edge_maps().size());
}

}  // namespace gldp
