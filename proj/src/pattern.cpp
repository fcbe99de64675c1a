#include "gldp/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gldp {

GraphletPattern::GraphletPattern(int k, std::vector<std::pair<int, int>> edges,
                                 std::string label)
    : k_(k), label_(std::move(label)) {
  if (k < 2 || k > kMaxNodes)
    throw std::invalid_argument("pattern node count must be in [2, 8], got " +
                                std::to_string(k));
  if (edges.empty())
    throw std::invalid_argument("pattern must have at least one edge");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= k || b >= k)
      throw std::invalid_argument("pattern edge endpoint out of range");
    if (a == b) throw std::invalid_argument("pattern self-loop rejected");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  for (const auto& [a, b] : edges_) {
    adjacency_[a] |= std::uint8_t(1u << b);
    adjacency_[b] |= std::uint8_t(1u << a);
  }
  for (int v = 0; v < k_; ++v)
    if (adjacency_[v] == 0)
      throw std::invalid_argument("pattern node " + std::to_string(v) +
                                  " is isolated");

  // Exhaustive automorphism enumeration over all k! permutations, collecting
  // the distinct permuted edge sets along the way. Each distinct image occurs
  // exactly A times, so the image count is k!/A.
  std::vector<int> perm(k_);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::pair<int, int>>> images;
  long long automorphisms = 0;
  do {
    std::vector<std::pair<int, int>> image;
    image.reserve(edges_.size());
    for (const auto& [a, b] : edges_) {
      int pa = perm[a], pb = perm[b];
      if (pa > pb) std::swap(pa, pb);
      image.emplace_back(pa, pb);
    }
    std::sort(image.begin(), image.end());
    if (image == edges_) ++automorphisms;
    images.insert(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));
  automorphism_count_ = automorphisms;
  position_edge_maps_.assign(images.begin(), images.end());

  if (label_.empty())
    label_ = "custom:k=" + std::to_string(k_) +
             ",edges=" + std::to_string(edges_.size());
}

GraphletPattern preset_triangle() { return preset_clique(3); }

GraphletPattern preset_cycle(int k) {
  if (k < 3 || k > GraphletPattern::kMaxNodes)
    throw std::invalid_argument("cycle needs 3 <= k <= 8");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return GraphletPattern(k, std::move(edges),
                         k == 3 ? "triangle" : "cycle:" + std::to_string(k));
}

GraphletPattern preset_clique(int k) {
  if (k < 2 || k > GraphletPattern::kMaxNodes)
    throw std::invalid_argument("clique needs 2 <= k <= 8");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return GraphletPattern(k, std::move(edges),
                         k == 3 ? "triangle" : "clique:" + std::to_string(k));
}

GraphletPattern preset_star(int k) {
  if (k < 2 || k > GraphletPattern::kMaxNodes)
    throw std::invalid_argument("star needs 2 <= k <= 8");
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 1; leaf < k; ++leaf) edges.emplace_back(0, leaf);
  return GraphletPattern(k, std::move(edges), "star:" + std::to_string(k));
}

GraphletPattern preset_path(int k) {
  if (k < 2 || k > GraphletPattern::kMaxNodes)
    throw std::invalid_argument("path needs 2 <= k <= 8");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return GraphletPattern(k, std::move(edges), "path:" + std::to_string(k));
}

GraphletPattern parse_pattern(const std::string& spec) {
  if (spec == "triangle") return preset_triangle();
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("unknown pattern: '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (family == "file") return load_pattern_file(arg);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pattern size in '" + spec + "'");
  }
  if (family == "cycle") return preset_cycle(k);
  if (family == "clique") return preset_clique(k);
  if (family == "star") return preset_star(k);
  if (family == "path") return preset_path(k);
  throw std::invalid_argument("unknown pattern family: '" + family + "'");
}

GraphletPattern read_pattern(std::istream& in, std::string label) {
  std::string line;
  int k = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    if (k < 0) {
      if (!(fields >> k) || k < 0)
        throw std::invalid_argument("pattern file: bad size header");
      continue;
    }
    int a, b;
    if (!(fields >> a >> b))
      throw std::invalid_argument("pattern file: malformed line " +
                                  std::to_string(line_no));
    edges.emplace_back(a, b);
  }
  if (k < 0) throw std::invalid_argument("pattern file: missing size header");
  return GraphletPattern(k, std::move(edges), std::move(label));
}

GraphletPattern load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pattern file: " + path);
  return read_pattern(in, "file:" + path);
}

}  // namespace gldp
