#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gldp {

// A k-node graphlet pattern, 2 <= k <= 8, with its automorphism count cached
// at construction. Pattern nodes must all have degree >= 1; the edge set is
// normalized (i < j, sorted, deduplicated).
class GraphletPattern {
 public:
  static constexpr int kMaxNodes = 8;

  GraphletPattern(int k, std::vector<std::pair<int, int>> edges,
                  std::string label = "");

  int k() const { return k_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  long long automorphism_count() const { return automorphism_count_; }
  const std::string& label() const { return label_; }

  bool adjacent(int a, int b) const {
    return a != b && ((adjacency_[a] >> b) & 1u);
  }

  // The k!/A distinct images of the edge set under all node permutations;
  // each is an edge list over positions [0, k). Summing the edge-product of
  // every image over one k-subset equals 1/A times the sum over all ordered
  // tuples of that subset.
  const std::vector<std::vector<std::pair<int, int>>>& position_edge_maps()
      const {
    return position_edge_maps_;
  }

 private:
  int k_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::array<std::uint8_t, kMaxNodes> adjacency_{};
  long long automorphism_count_ = 0;
  std::vector<std::vector<std::pair<int, int>>> position_edge_maps_;
  std::string label_;
};

// Preset families. star(k) is the k-node star K(1, k-1); path(k) the k-node
// path; cycle(k) needs k >= 3.
GraphletPattern preset_triangle();
GraphletPattern preset_cycle(int k);
GraphletPattern preset_clique(int k);
GraphletPattern preset_star(int k);
GraphletPattern preset_path(int k);

// Parses "triangle" | "cycle:K" | "clique:K" | "star:K" | "path:K" |
// "file:PATH".
GraphletPattern parse_pattern(const std::string& spec);

// Pattern file format: first line is k, then edge lines as in the graph
// edge-list format.
GraphletPattern read_pattern(std::istream& in, std::string label = "");
GraphletPattern load_pattern_file(const std::string& path);

}  // namespace gldp
