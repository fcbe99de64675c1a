#pragma once

#include <cstdint>
#include <iosfwd>

#include "gldp/graph.hpp"

namespace gldp {

// Privacy parameter epsilon > 0 plus the channel constants it determines.
// Each adjacency bit is flipped independently with probability
// 1 / (1 + e^epsilon), and the reverse channel maps a noisy bit b to
// debias_high() (b = 1) or debias_low() (b = 0) so the result is an
// unbiased estimate of the original bit.
class PrivacyBudget {
 public:
  explicit PrivacyBudget(double epsilon);

  double epsilon() const { return epsilon_; }
  double exp_epsilon() const { return exp_epsilon_; }
  double flip_probability() const { return 1.0 / (1.0 + exp_epsilon_); }
  double keep_probability() const { return exp_epsilon_ / (1.0 + exp_epsilon_); }
  double debias_high() const { return exp_epsilon_ / (exp_epsilon_ - 1.0); }
  double debias_low() const { return -1.0 / (exp_epsilon_ - 1.0); }

 private:
  double epsilon_;
  double exp_epsilon_;
};

// The randomized bit matrix a data collector actually sees: every node pair's
// adjacency bit after independent random flips.
class NoisyAdjacency {
 public:
  NoisyAdjacency(int n, double epsilon, std::uint64_t master_seed)
      : bits_(n), epsilon_(epsilon), master_seed_(master_seed) {}

  int node_count() const { return bits_.node_count(); }
  double epsilon() const { return epsilon_; }
  std::uint64_t master_seed() const { return master_seed_; }
  bool bit(int i, int j) const { return bits_.get(i, j); }
  void set_bit(int i, int j, bool value) { bits_.set(i, j, value); }
  const PairBitset& bits() const { return bits_; }

  // Test hook: the channel output when no flips happen at all.
  static NoisyAdjacency noiseless(const Graph& g, double epsilon);

 private:
  PairBitset bits_;
  double epsilon_;
  std::uint64_t master_seed_;
};

// Applies per-pair randomized response to every node pair of g. Each pair's
// coin is an independent function of (seed, pair index), so the output is
// reproducible and pair order never matters.
NoisyAdjacency obfuscate(const Graph& g, const PrivacyBudget& budget,
                         std::uint64_t seed);

// Noisy bits mapped through the unbiased reverse channel: value(i, j) is
// debias_high or debias_low, and its expectation equals the true bit.
class UnbiasedAdjacency {
 public:
  UnbiasedAdjacency(PairBitset bits, double low, double high, double epsilon)
      : bits_(std::move(bits)), low_(low), high_(high), epsilon_(epsilon) {}

  int node_count() const { return bits_.node_count(); }
  double epsilon() const { return epsilon_; }
  double low() const { return low_; }
  double high() const { return high_; }
  double value(int i, int j) const { return bits_.get(i, j) ? high_ : low_; }
  const PairBitset& bits() const { return bits_; }

  // Test hook: exact adjacency values (1/0) with no noise applied.
  static UnbiasedAdjacency noiseless(const Graph& g);

 private:
  PairBitset bits_;
  double low_;
  double high_;
  double epsilon_;
};

UnbiasedAdjacency debias(const NoisyAdjacency& noisy,
                         const PrivacyBudget& budget);

// Serializes a noisy matrix: "n epsilon master_seed" header, then one row of
// n '0'/'1' characters per node (diagonal written as '0', matrix symmetric).
void write_noisy(std::ostream& out, const NoisyAdjacency& noisy);

}  // namespace gldp
