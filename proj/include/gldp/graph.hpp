#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gldp {

// Symmetric boolean incidence over unordered node pairs {i,j}, i != j,
// bit-packed into the strict upper triangle. The diagonal is never stored and
// reads as false. Pair {i,j} with i < j lives at bit i*n - i*(i+1)/2 + (j-i-1).
class PairBitset {
 public:
  PairBitset() = default;
  explicit PairBitset(int node_count);

  int node_count() const { return n_; }
  std::size_t pair_count() const {
    return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  static std::size_t pair_index(int n, int i, int j);

  bool get(int i, int j) const;
  void set(int i, int j, bool value = true);

  bool get_pair(std::size_t pair) const {
    return (words_[pair >> 6] >> (pair & 63)) & 1u;
  }
  void set_pair(std::size_t pair, bool value);

  long long count_set() const;

  bool operator==(const PairBitset&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph on n labeled nodes. No self-loops, no multi-edges.
// Immutable by convention once built; add_edge exists for constructors and
// generators only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count) : bits_(node_count) {}
  static Graph from_bits(PairBitset bits);

  int node_count() const { return bits_.node_count(); }
  bool adjacent(int i, int j) const { return bits_.get(i, j); }
  void add_edge(int i, int j);

  long long edge_count() const { return bits_.count_set(); }
  int degree(int i) const;

  const PairBitset& bits() const { return bits_; }

  bool operator==(const Graph&) const = default;

 private:
  PairBitset bits_;
};

// Builds a graph from an explicit edge list. Duplicate pairs (in either
// order) collapse to one edge; out-of-range endpoints and self-loops are
// rejected.
Graph build_graph(int node_count, std::span<const std::pair<int, int>> edges);
Graph build_graph(int node_count,
                  std::initializer_list<std::pair<int, int>> edges);

// Neighbor lists for all nodes, ascending.
std::vector<std::vector<int>> adjacency_lists(const Graph& g);

// Edge-list text format: first line is n; each following non-empty line is
// "i j" with 0 <= i < j < n; '#' starts a comment line; LF endings. Writing
// emits pairs sorted lexicographically.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace gldp
