#include "gldp/ldp.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gldp/rng.hpp"

namespace gldp {

PrivacyBudget::PrivacyBudget(double epsilon) : epsilon_(epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw std::invalid_argument("epsilon must be a finite positive number");
  }
  // Beyond ~709 exp() overflows double; such budgets are indistinguishable
  // from no privacy anyway.
  if (epsilon > 700.0) {
    throw std::invalid_argument("epsilon too large (max 700)");
  }
  exp_epsilon_ = std::exp(epsilon);
}

NoisyAdjacency NoisyAdjacency::noiseless(const Graph& g, double epsilon) {
  NoisyAdjacency out(g.node_count(), epsilon, 0);
  out.bits_ = g.bits();
  return out;
}

NoisyAdjacency obfuscate(const Graph& g, const PrivacyBudget& budget,
                         std::uint64_t seed) {
  const int n = g.node_count();
  const double flip = budget.flip_probability();
  NoisyAdjacency out(n, budget.epsilon(), seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t pair = PairBitset::pair_index(n, i, j);
      const double u = rng::to_unit(rng::counter_draw(seed, pair));
      const bool flipped = u < flip;
      out.set_bit(i, j, g.adjacent(i, j) != flipped);
    }
  }
  return out;
}

UnbiasedAdjacency UnbiasedAdjacency::noiseless(const Graph& g) {
  return UnbiasedAdjacency(g.bits(), 0.0, 1.0,
                           std::numeric_limits<double>::infinity());
}

UnbiasedAdjacency debias(const NoisyAdjacency& noisy,
                         const PrivacyBudget& budget) {
  if (noisy.epsilon() != budget.epsilon()) {
    throw std::invalid_argument(
        "debias budget does not match the epsilon the matrix was randomized "
        "with");
  }
  return UnbiasedAdjacency(noisy.bits(), budget.debias_low(),
                           budget.debias_high(), budget.epsilon());
}

void write_noisy(std::ostream& out, const NoisyAdjacency& noisy) {
  const int n = noisy.node_count();
  out << n << ' ' << noisy.epsilon() << ' ' << noisy.master_seed() << '\n';
  std::string row(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(j)] =
          (i != j && noisy.bit(i, j)) ? '1' : '0';
    }
    out << row << '\n';
  }
}

}  // namespace gldp
