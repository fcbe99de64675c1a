#include "gldp/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace gldp {

std::string ExactCount::str() const {
  if (value == 0) return "0";
  std::string digits;
  unsigned __int128 v = value;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& out, const ExactCount& c) {
  return out << c.str();
}

namespace {

// Assignment order for the backtracking search: BFS within each pattern
// component, so every non-root vertex has at least one already-placed
// neighbor and candidates come from a neighbor list instead of all nodes.
struct SearchPlan {
  std::vector<int> order;
  // earlier_neighbors[d]: pattern neighbors of order[d] placed before depth d.
  std::vector<std::vector<int>> earlier_neighbors;
};

SearchPlan make_plan(const GraphletPattern& pattern) {
  const int k = pattern.k();
  SearchPlan plan;
  std::vector<bool> visited(k, false);
  for (int root = 0; root < k; ++root) {
    if (visited[root]) continue;
    std::vector<int> queue{root};
    visited[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      plan.order.push_back(v);
      for (int u = 0; u < k; ++u) {
        if (!visited[u] && pattern.adjacent(v, u)) {
          visited[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  plan.earlier_neighbors.resize(k);
  std::vector<int> depth_of(k, -1);
  for (int d = 0; d < k; ++d) depth_of[plan.order[d]] = d;
  for (int d = 0; d < k; ++d) {
    for (int u = 0; u < k; ++u) {
      if (pattern.adjacent(plan.order[d], u) && depth_of[u] < d) {
        plan.earlier_neighbors[d].push_back(u);
      }
    }
  }
  return plan;
}

// Enumerates every injective map pattern-vertex -> graph-node that sends
// pattern edges to graph edges, invoking `leaf` once per complete map with
// the current assignment.
template <typename Leaf>
void enumerate_maps(const Graph& g, const GraphletPattern& pattern,
                    const SearchPlan& plan,
                    const std::vector<std::vector<int>>& adj, Leaf&& leaf) {
  const int k = pattern.k();
  const int n = g.node_count();
  if (k > n) return;
  std::vector<int> assigned(k, -1);
  std::vector<bool> used(n, false);

  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      leaf(assigned);
      return;
    }
    const int pv = plan.order[depth];
    const auto& earlier = plan.earlier_neighbors[depth];
    auto try_node = [&](int node) {
      if (used[node]) return;
      for (int e : earlier) {
        if (!g.adjacent(node, assigned[e])) return;
      }
      assigned[pv] = node;
      used[node] = true;
      self(self, depth + 1);
      used[node] = false;
      assigned[pv] = -1;
    };
    if (earlier.empty()) {
      for (int node = 0; node < n; ++node) try_node(node);
    } else {
      for (int node : adj[assigned[earlier.front()]]) try_node(node);
    }
  };
  recurse(recurse, 0);
}

}  // namespace

ExactCount tuple_count_W(const Graph& g, const GraphletPattern& pattern) {
  const SearchPlan plan = make_plan(pattern);
  const auto adj = adjacency_lists(g);
  unsigned __int128 total = 0;
  enumerate_maps(g, pattern, plan, adj,
                 [&](const std::vector<int>&) { ++total; });
  return ExactCount{total};
}

ExactCount exact_count(const Graph& g, const GraphletPattern& pattern) {
  const ExactCount w = tuple_count_W(g, pattern);
  const auto a = static_cast<unsigned __int128>(pattern.automorphism_count());
  if (w.value % a != 0) {
    throw std::logic_error("tuple count not divisible by automorphism count");
  }
  return ExactCount{w.value / a};
}

ExactCount count_copies_containing(
    const Graph& g, const GraphletPattern& pattern,
    std::span<const std::pair<int, int>> required_edges) {
  std::vector<std::pair<int, int>> required(required_edges.begin(),
                                            required_edges.end());
  for (auto& [a, b] : required) {
    if (a > b) std::swap(a, b);
  }
  const SearchPlan plan = make_plan(pattern);
  const auto adj = adjacency_lists(g);
  const auto& edges = pattern.edges();
  unsigned __int128 matching = 0;
  enumerate_maps(g, pattern, plan, adj, [&](const std::vector<int>& assigned) {
    for (const auto& [ra, rb] : required) {
      bool covered = false;
      for (const auto& [pa, pb] : edges) {
        const int ia = std::min(assigned[pa], assigned[pb]);
        const int ib = std::max(assigned[pa], assigned[pb]);
        if (ia == ra && ib == rb) {
          covered = true;
          break;
        }
      }
      if (!covered) return;
    }
    ++matching;
  });
  const auto a = static_cast<unsigned __int128>(pattern.automorphism_count());
  if (matching % a != 0) {
    throw std::logic_error("filtered tuple count not divisible by automorphism count");
  }
  return ExactCount{matching / a};
}

}  // namespace gldp
