#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gldp/graph.hpp"
#include "gldp/oracle.hpp"

namespace gldp {

// Raised when a requested computation is exhaustive-search territory and the
// caller did not opt in to waiting for it.
struct ScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using BitVector = std::vector<bool>;
using BitMatrix = std::vector<BitVector>;

// Reproducible random bit vectors/matrices for exercising the constructions.
BitVector random_bits(int length, std::uint64_t seed);
BitMatrix random_bit_matrix(int rows, int cols, std::uint64_t seed);

// Tripartite construction on n nodes (3 | n) with parts
// U = [0, n/3), Y = [n/3, 2n/3), W = [2n/3, n):
//   u_i ~ y_j        iff X[i][j]
//   u_i ~ w_j (all j) iff mu[i]
//   y_i ~ w_j (all j) iff upsilon[i]
// No other edges. Triangle counts in this family are the hard instances for
// the estimation-error lower bound.
Graph build_triangle_gadget(int n, const BitVector& mu,
                            const BitVector& upsilon, const BitMatrix& X);

// Generalization to k >= 3 on k*n/3 nodes: parts U, Y, W_1..W_{k-2}, each of
// size n/3 (W_p occupies [(p+1)*n/3, (p+2)*n/3)).
//   u_i ~ y_j            iff X[i][j]
//   u_i ~ w_{p,j} (all p, j) iff mu[i]
//   y_i ~ w_{p,j} (all p, j) iff upsilon[i]
//   w_{p,i} ~ w_{q,j} for all i, j whenever p != q.
// k = 3 reduces to the triangle construction. Its k-clique count factors as
// (triangle count of the k = 3 instance) * (n/3)^(k-3).
Graph build_clique_gadget(int k, int n, const BitVector& mu,
                          const BitVector& upsilon, const BitMatrix& X);

struct CliqueLemmaResult {
  bool ok = false;
  ExactCount clique_count;   // K_k copies counted directly in the k-gadget
  ExactCount triangle_count; // triangles in the matching 3-gadget
  ExactCount expected;       // triangle_count * (n/3)^(k-3)
};

// Verifies the clique-count factorization for one (mu, upsilon, X) instance.
// Guarded to k <= 5, n <= 9 unless allow_slow.
CliqueLemmaResult clique_lemma_check(int k, int n, const BitVector& mu,
                                     const BitVector& upsilon,
                                     const BitMatrix& X,
                                     bool allow_slow = false);

// Near-complete construction on n nodes (n even): every pair is an edge
// except the matched pairs {2i, 2i+1}, and matched pair i is restored iff
// x[i]. The k-cycle count of this family depends on x only through |x|.
Graph build_cycle_gadget(int n, const BitVector& x);

struct CycleStructureReport {
  int n = 0;
  int k = 0;
  ExactCount base_count;          // k-cycles using no matched pair
  std::vector<ExactCount> cp;     // cp[p-1]: k-cycles through p fixed matched
                                  // pairs and no other matched pair
  std::vector<ExactCount> direct;      // k-cycle count at weight w = 0..n/2
  std::vector<ExactCount> via_formula; // base + sum_p C(w, p) * cp[p-1]
  bool formula_holds = false;
  bool difference_bound_holds = false;
  int sampled_pairs = 0;
};

// Checks the two structural facts the cycle construction is built for:
// (1) the count at every weight w matches the binomial expansion over the
//     per-subset counts cp, for a canonical and a random weight-w vector;
// (2) count(x) - count(x') >= (|x| - |x'|) * cp[0] on `sampled_pairs` random
//     vector pairs.
// Guarded to n <= 10, k <= 5 unless allow_slow.
CycleStructureReport cycle_structure_check(int n, int k, int sampled_pairs = 100,
                                           std::uint64_t seed = 0,
                                           bool allow_slow = false);

}  // namespace gldp
