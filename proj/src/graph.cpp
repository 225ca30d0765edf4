#include "swapplanarity/graph.hpp"

#include <algorithm>
#include <numeric>

namespace swapplanarity {

void canonicalize_edges(EdgeList& edges) {
  for (auto& e : edges) e = Edge::of(e.u, e.v);
  std::sort(edges.begin(), edges.end());
}

std::vector<std::vector<int>> adjacency_lists(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> degrees(int n, std::span<const Edge> edges) {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<int> component_ids(int n, std::span<const Edge> edges) {
  // Union-find with path halving; relabelled afterwards so ids are dense.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> id(n, -1);
  std::vector<int> root_id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const auto r = find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  const auto ids = component_ids(n, edges);
  return std::all_of(ids.begin(), ids.end(), [](int c) { return c == 0; });
}

bool is_star(std::span<const Edge> edges) {
  if (edges.empty()) return false;
  for (const int hub : {edges.front().u, edges.front().v}) {
    if (std::all_of(edges.begin(), edges.end(), [hub](const Edge& e) { return e.touches(hub); }))
      return true;
  }
  return false;
}

EdgeIndex::EdgeIndex(int n, std::span<const Edge> edges)
    : n_(n), table_(n * n, -1) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    table_[e.u * n + e.v] = static_cast<int>(i);
    table_[e.v * n + e.u] = static_cast<int>(i);
  }
}

}  // namespace swapplanarity
