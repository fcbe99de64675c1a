#include "gldp/gadgets.hpp"

#include <algorithm>
#include <string>

#include "gldp/pattern.hpp"
#include "gldp/rng.hpp"

namespace gldp {

namespace {

void check_thirds(int n) {
  if (n < 3 || n % 3 != 0) {
    throw std::invalid_argument("construction needs n divisible by 3");
  }
}

void check_lengths(int third, const BitVector& mu, const BitVector& upsilon,
                   const BitMatrix& X) {
  const auto expected = static_cast<std::size_t>(third);
  if (mu.size() != expected || upsilon.size() != expected) {
    throw std::invalid_argument("mu and upsilon must have length n/3");
  }
  if (X.size() != expected) {
    throw std::invalid_argument("X must be an n/3 x n/3 matrix");
  }
  for (const auto& row : X) {
    if (row.size() != expected) {
      throw std::invalid_argument("X must be an n/3 x n/3 matrix");
    }
  }
}

unsigned __int128 binomial_u128(int a, int b) {
  if (b < 0 || b > a) return 0;
  unsigned __int128 result = 1;
  for (int i = 0; i < b; ++i) {
    result = result * static_cast<unsigned>(a - i) / static_cast<unsigned>(i + 1);
  }
  return result;
}

}  // namespace

BitVector random_bits(int length, std::uint64_t seed) {
  BitVector bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    bits[static_cast<std::size_t>(i)] =
        (rng::counter_draw(seed, static_cast<std::uint64_t>(i)) & 1) != 0;
  }
  return bits;
}

BitMatrix random_bit_matrix(int rows, int cols, std::uint64_t seed) {
  BitMatrix m;
  m.reserve(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    m.push_back(random_bits(cols, rng::derive_seed(seed, r)));
  }
  return m;
}

Graph build_clique_gadget(int k, int n, const BitVector& mu,
                          const BitVector& upsilon, const BitMatrix& X) {
  if (k < 3 || k > 8) {
    throw std::invalid_argument("clique construction needs 3 <= k <= 8");
  }
  check_thirds(n);
  const int third = n / 3;
  check_lengths(third, mu, upsilon, X);

  Graph g(k * third);
  const auto u_node = [&](int i) { return i; };
  const auto y_node = [&](int i) { return third + i; };
  const auto w_node = [&](int p, int i) { return (p + 2) * third + i; };
  const int blocks = k - 2;

  for (int i = 0; i < third; ++i) {
    for (int j = 0; j < third; ++j) {
      if (X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        g.add_edge(u_node(i), y_node(j));
      }
    }
  }
  for (int i = 0; i < third; ++i) {
    if (!mu[static_cast<std::size_t>(i)]) continue;
    for (int p = 0; p < blocks; ++p) {
      for (int j = 0; j < third; ++j) g.add_edge(u_node(i), w_node(p, j));
    }
  }
  for (int i = 0; i < third; ++i) {
    if (!upsilon[static_cast<std::size_t>(i)]) continue;
    for (int p = 0; p < blocks; ++p) {
      for (int j = 0; j < third; ++j) g.add_edge(y_node(i), w_node(p, j));
    }
  }
  for (int p = 0; p < blocks; ++p) {
    for (int q = p + 1; q < blocks; ++q) {
      for (int i = 0; i < third; ++i) {
        for (int j = 0; j < third; ++j) {
          g.add_edge(w_node(p, i), w_node(q, j));
        }
      }
    }
  }
  return g;
}

Graph build_triangle_gadget(int n, const BitVector& mu,
                            const BitVector& upsilon, const BitMatrix& X) {
  return build_clique_gadget(3, n, mu, upsilon, X);
}

CliqueLemmaResult clique_lemma_check(int k, int n, const BitVector& mu,
                                     const BitVector& upsilon,
                                     const BitMatrix& X, bool allow_slow) {
  if (!allow_slow && (k > 5 || n > 9)) {
    throw ScaleError(
        "clique factorization check is exhaustive; k <= 5 and n <= 9 unless "
        "slow mode is enabled");
  }
  CliqueLemmaResult result;
  const Graph big = build_clique_gadget(k, n, mu, upsilon, X);
  result.clique_count = exact_count(big, preset_clique(k));
  const Graph small = build_triangle_gadget(n, mu, upsilon, X);
  result.triangle_count = exact_count(small, preset_triangle());
  unsigned __int128 expected = result.triangle_count.value;
  for (int i = 0; i < k - 3; ++i) {
    expected *= static_cast<unsigned>(n / 3);
  }
  result.expected = ExactCount{expected};
  result.ok = result.clique_count == result.expected;
  return result;
}

Graph build_cycle_gadget(int n, const BitVector& x) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("cycle construction needs even n >= 2");
  }
  if (x.size() != static_cast<std::size_t>(n / 2)) {
    throw std::invalid_argument("x must have length n/2");
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool matched = (j == i + 1) && (i % 2 == 0);
      if (!matched) {
        g.add_edge(i, j);
      } else if (x[static_cast<std::size_t>(i / 2)]) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

CycleStructureReport cycle_structure_check(int n, int k, int sampled_pairs,
                                           std::uint64_t seed,
                                           bool allow_slow) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("cycle structure check needs even n >= 4");
  }
  if (k < 3 || k > n) {
    throw std::invalid_argument("cycle structure check needs 3 <= k <= n");
  }
  if (sampled_pairs < 0) {
    throw std::invalid_argument("sampled_pairs must be non-negative");
  }
  if (!allow_slow && (n > 10 || k > 5)) {
    throw ScaleError(
        "cycle structure check is exhaustive; n <= 10 and k <= 5 unless slow "
        "mode is enabled");
  }

  const int half = n / 2;
  const GraphletPattern cycle = preset_cycle(k);
  CycleStructureReport report;
  report.n = n;
  report.k = k;
  report.sampled_pairs = sampled_pairs;

  const auto canonical = [&](int weight) {
    BitVector x(static_cast<std::size_t>(half), false);
    for (int i = 0; i < weight; ++i) x[static_cast<std::size_t>(i)] = true;
    return x;
  };
  const auto count_at = [&](const BitVector& x) {
    return exact_count(build_cycle_gadget(n, x), cycle);
  };

  report.base_count = count_at(canonical(0));

  // cp[p-1]: cycles through the first p matched pairs, counted in the graph
  // where exactly those pairs are restored (so no other matched pair can
  // contribute).
  report.cp.reserve(static_cast<std::size_t>(half));
  for (int p = 1; p <= half; ++p) {
    std::vector<std::pair<int, int>> required;
    required.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) required.emplace_back(2 * i, 2 * i + 1);
    report.cp.push_back(count_copies_containing(
        build_cycle_gadget(n, canonical(p)), cycle, required));
  }

  const auto formula_value = [&](int weight) {
    unsigned __int128 total = report.base_count.value;
    for (int p = 1; p <= weight; ++p) {
      total += binomial_u128(weight, p) *
               report.cp[static_cast<std::size_t>(p - 1)].value;
    }
    return ExactCount{total};
  };

  // Random weight-w vector: shuffle positions with the seeded generator.
  const auto random_weighted = [&](int weight, std::uint64_t stream) {
    std::vector<int> positions(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) positions[static_cast<std::size_t>(i)] = i;
    std::uint64_t counter = 0;
    for (int i = half - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng::bounded(
          [&] { return rng::counter_draw(stream, counter++); },
          static_cast<std::uint64_t>(i + 1)));
      std::swap(positions[static_cast<std::size_t>(i)],
                positions[static_cast<std::size_t>(j)]);
    }
    BitVector x(static_cast<std::size_t>(half), false);
    for (int i = 0; i < weight; ++i) {
      x[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] =
          true;
    }
    return x;
  };

  report.formula_holds = true;
  for (int w = 0; w <= half; ++w) {
    const ExactCount direct = count_at(canonical(w));
    const ExactCount expected = formula_value(w);
    report.direct.push_back(direct);
    report.via_formula.push_back(expected);
    bool holds = direct == expected;
    if (w > 0 && w < half) {
      const ExactCount shuffled =
          count_at(random_weighted(w, rng::derive_seed(seed, 'F', w)));
      holds = holds && shuffled == expected;
    }
    report.formula_holds = report.formula_holds && holds;
  }

  report.difference_bound_holds = true;
  const unsigned __int128 c1 = report.cp.front().value;
  for (int s = 0; s < sampled_pairs; ++s) {
    const std::uint64_t pair_seed = rng::derive_seed(seed, 'D', s);
    auto draw_weight = [&](std::uint64_t tag) {
      return static_cast<int>(rng::bounded(
          [&, c = std::uint64_t{0}]() mutable {
            return rng::counter_draw(rng::derive_seed(pair_seed, tag), c++);
          },
          static_cast<std::uint64_t>(half + 1)));
    };
    int w_hi = draw_weight(1);
    int w_lo = draw_weight(2);
    if (w_hi < w_lo) std::swap(w_hi, w_lo);
    const ExactCount hi =
        count_at(random_weighted(w_hi, rng::derive_seed(pair_seed, 3)));
    const ExactCount lo =
        count_at(random_weighted(w_lo, rng::derive_seed(pair_seed, 4)));
    const unsigned __int128 gap =
        static_cast<unsigned>(w_hi - w_lo) * c1;
    if (hi.value < lo.value + gap) {
      report.difference_bound_holds = false;
    }
  }
  return report;
}

}  // namespace gldp
