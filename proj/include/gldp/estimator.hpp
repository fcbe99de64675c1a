#pragma once

#include <cstdint>
#include <string>

#include "gldp/graph.hpp"
#include "gldp/ldp.hpp"
#include "gldp/pattern.hpp"

namespace gldp {

struct Estimate {
  double value = 0.0;
  std::string pattern;
  int n = 0;
  double epsilon = 0.0;
  std::uint64_t master_seed = 0;
  double elapsed_seconds = 0.0;
};

// Core estimator. Sums, over every k-subset of nodes, the pattern-product of
// unbiased edge values for each distinct placement of the pattern on that
// subset; placements come from GraphletPattern::position_edge_maps(), so the
// automorphism normalization is already folded in. Equals estimate_naive
// exactly. With threads > 1 the subset range is split into per-node chunks
// combined by a fixed-shape pairwise reduction, so the result is bit-identical
// for every thread count.
double estimate_from_unbiased(const UnbiasedAdjacency& ua,
                              const GraphletPattern& pattern, int threads = 1);

// Reference implementation: iterates all ordered k-tuples of distinct nodes
// and divides by the automorphism count at the end. O(n^k); for tests and
// tiny inputs only.
double estimate_naive(const UnbiasedAdjacency& ua,
                      const GraphletPattern& pattern);

// Full private pipeline: randomize g's adjacency bits, debias, estimate.
Estimate algorithm1(const Graph& g, const GraphletPattern& pattern,
                    const PrivacyBudget& budget, std::uint64_t seed,
                    int threads = 1);

// Baseline: count copies directly in the noisy graph with no correction.
// Biased; kept for comparison experiments.
double baseline_rr_count(const NoisyAdjacency& noisy,
                         const GraphletPattern& pattern);

Estimate baseline_rr(const Graph& g, const GraphletPattern& pattern,
                     const PrivacyBudget& budget, std::uint64_t seed);

// Work estimate for the core estimator: C(n, k) subsets times placements per
// subset. Saturates at the double it is computed in.
double estimation_cost(int n, const GraphletPattern& pattern);

}  // namespace gldp
