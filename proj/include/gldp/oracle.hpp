#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>

#include "gldp/graph.hpp"
#include "gldp/pattern.hpp"

namespace gldp {

// Non-negative count with 128-bit headroom; the ordered-tuple counts below
// can reach n^k before normalization.
struct ExactCount {
  unsigned __int128 value = 0;

  double as_double() const { return static_cast<double>(value); }
  std::string str() const;

  friend bool operator==(const ExactCount&, const ExactCount&) = default;
  friend auto operator<=>(const ExactCount&, const ExactCount&) = default;
};

std::ostream& operator<<(std::ostream& out, const ExactCount& c);

// W(G, P): ordered k-tuples of distinct nodes whose required pattern edges
// are all present in G. Exhaustive with pruning; intended for oracle-scale
// inputs, not the production estimation path.
ExactCount tuple_count_W(const Graph& g, const GraphletPattern& pattern);

// Non-induced copy count: subgraphs (V', E') of G isomorphic to the pattern.
// Computed as W / A, which is always an exact division.
ExactCount exact_count(const Graph& g, const GraphletPattern& pattern);

// Copies whose edge image contains every pair in `required_edges`.
// required_edges are node pairs of G. With an empty requirement this equals
// exact_count.
ExactCount count_copies_containing(
    const Graph& g, const GraphletPattern& pattern,
    std::span<const std::pair<int, int>> required_edges);

}  // namespace gldp
