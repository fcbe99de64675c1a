#include "gldp/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gldp {

namespace {

[[noreturn]] void bad_pair(int n, int i, int j, const char* what) {
  std::ostringstream msg;
  msg << what << ": pair {" << i << ", " << j << "} with n = " << n;
  throw std::invalid_argument(msg.str());
}

void check_pair(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n)
    bad_pair(n, i, j, "endpoint out of range");
  if (i == j) bad_pair(n, i, j, "self-loop rejected");
}

}  // namespace

PairBitset::PairBitset(int node_count) : n_(node_count) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  words_.assign((pair_count() + 63) / 64, 0);
}

std::size_t PairBitset::pair_index(int n, int i, int j) {
  // caller guarantees 0 <= i < j < n
  return static_cast<std::size_t>(i) * n -
         static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

bool PairBitset::get(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  check_pair(n_, i, j);
  return get_pair(pair_index(n_, i, j));
}

void PairBitset::set(int i, int j, bool value) {
  if (i > j) std::swap(i, j);
  check_pair(n_, i, j);
  set_pair(pair_index(n_, i, j), value);
}

void PairBitset::set_pair(std::size_t pair, bool value) {
  const std::uint64_t mask = 1ULL << (pair & 63);
  if (value)
    words_[pair >> 6] |= mask;
  else
    words_[pair >> 6] &= ~mask;
}

long long PairBitset::count_set() const {
  long long total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

Graph Graph::from_bits(PairBitset bits) {
  Graph g;
  g.bits_ = std::move(bits);
  return g;
}

void Graph::add_edge(int i, int j) { bits_.set(i, j, true); }

int Graph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < node_count(); ++j)
    if (j != i && adjacent(i, j)) ++d;
  return d;
}

Graph build_graph(int node_count, std::span<const std::pair<int, int>> edges) {
  Graph g(node_count);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph build_graph(int node_count,
                  std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(node_count,
                     std::span<const std::pair<int, int>>(edges.begin(),
                                                          edges.size()));
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  return adj;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  long long n = -1;
  Graph g;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0)
        throw std::invalid_argument("edge list: bad node-count header at line " +
                                    std::to_string(line_no));
      std::string extra;
      if (fields >> extra)
        throw std::invalid_argument("edge list: trailing tokens in header");
      g = Graph(static_cast<int>(n));
      continue;
    }
    long long i, j;
    if (!(fields >> i >> j))
      throw std::invalid_argument("edge list: malformed line " +
                                  std::to_string(line_no) + ": '" + line + "'");
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument("edge list: trailing tokens at line " +
                                  std::to_string(line_no));
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("edge list: endpoint out of range at line " +
                                  std::to_string(line_no));
    g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  if (n < 0) throw std::invalid_argument("edge list: missing node-count header");
  return g;
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const int n = g.node_count();
  out << n << '\n';
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) out << i << ' ' << j << '\n';
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_edge_list(in);
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write graph file: " + path);
  out << write_edge_list(g);
}

}  // namespace gldp
