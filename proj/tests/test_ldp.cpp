#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gldp/ldp.hpp"
#include "oracle_ref.hpp"

using namespace gldp;

TEST_CASE("channel probabilities at epsilon = ln 3") {
  const PrivacyBudget budget(std::log(3.0));
  CHECK(budget.flip_probability() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(budget.keep_probability() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(budget.debias_high() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(budget.debias_low() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(budget.flip_probability() + budget.keep_probability() == 1.0);
}

TEST_CASE("reverse channel is unbiased for both input bits") {
  for (double eps : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    const PrivacyBudget b(eps);
    // bit 1: kept with keep prob (-> high), flipped with flip prob (-> low)
    const double mean_one = b.keep_probability() * b.debias_high() +
                            b.flip_probability() * b.debias_low();
    // bit 0: stays 0 with keep prob (-> low), flips to 1 (-> high)
    const double mean_zero = b.flip_probability() * b.debias_high() +
                             b.keep_probability() * b.debias_low();
    CHECK(std::abs(mean_one - 1.0) <= 1e-12);
    CHECK(std::abs(mean_zero - 0.0) <= 1e-12);
  }
}

TEST_CASE("budget validation") {
  CHECK_THROWS_AS(PrivacyBudget(0.0), std::invalid_argument);
  CHECK_THROWS_AS(PrivacyBudget(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(PrivacyBudget(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(PrivacyBudget(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(PrivacyBudget(701.0), std::invalid_argument);
  CHECK_NOTHROW(PrivacyBudget(700.0));
}

TEST_CASE("randomized bits are reproducible per seed") {
  const Graph g = testref::random_graph(12, 99);
  const PrivacyBudget b(1.0);
  const NoisyAdjacency a1 = obfuscate(g, b, 5);
  const NoisyAdjacency a2 = obfuscate(g, b, 5);
  const NoisyAdjacency a3 = obfuscate(g, b, 6);
  CHECK(a1.bits() == a2.bits());
  CHECK(a1.bits() != a3.bits());
  CHECK(a1.epsilon() == 1.0);
  CHECK(a1.master_seed() == 5);
}

TEST_CASE("empirical flip rate tracks 1/(1+e^eps)") {
  const int n = 80;
  const Graph g = testref::random_graph(n, 17, 0.3);
  const double eps = 1.0;
  const PrivacyBudget b(eps);
  const NoisyAdjacency noisy = obfuscate(g, b, 42);
  long long flips = 0, pairs = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++pairs;
      if (noisy.bit(i, j) != g.adjacent(i, j)) ++flips;
    }
  }
  const double q = 1.0 / (1.0 + std::exp(eps));
  // 3160 pairs; 4 sigma is about 0.032.
  CHECK(std::abs(static_cast<double>(flips) / pairs - q) < 0.035);
}

TEST_CASE("noiseless hooks reproduce the input graph") {
  const Graph g = testref::random_graph(9, 3);
  const NoisyAdjacency noisy = NoisyAdjacency::noiseless(g, 2.0);
  const UnbiasedAdjacency exact = UnbiasedAdjacency::noiseless(g);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (i == j) continue;
      CHECK(noisy.bit(i, j) == g.adjacent(i, j));
      CHECK(exact.value(i, j) == (g.adjacent(i, j) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("debias maps bits to the two channel values") {
  const Graph g = testref::random_graph(10, 21);
  const PrivacyBudget b(1.5);
  const NoisyAdjacency noisy = obfuscate(g, b, 7);
  const UnbiasedAdjacency ua = debias(noisy, b);
  CHECK(ua.high() == b.debias_high());
  CHECK(ua.low() == b.debias_low());
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      CHECK(ua.value(i, j) == (noisy.bit(i, j) ? b.debias_high()
                                                : b.debias_low()));
    }
  }
  CHECK_THROWS_AS(debias(noisy, PrivacyBudget(1.4999)), std::invalid_argument);
}

TEST_CASE("noisy matrix serialization is symmetric with a zero diagonal") {
  Graph g(3);
  g.add_edge(0, 2);
  const NoisyAdjacency noisy = NoisyAdjacency::noiseless(g, 2.0);
  std::ostringstream out;
  write_noisy(out, noisy);
  CHECK(out.str() == "3 2 0\n001\n000\n100\n");
}
