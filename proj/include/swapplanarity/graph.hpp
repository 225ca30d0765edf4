#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace swapplanarity {

/// Undirected edge between vertex (or point) indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static constexpr Edge of(int a, int b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool touches(int w) const noexcept { return u == w || v == w; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Sorts and normalizes in place (u < v). Does not remove duplicates.
void canonicalize_edges(EdgeList& edges);

std::vector<std::vector<int>> adjacency_lists(int n, std::span<const Edge> edges);

std::vector<int> degrees(int n, std::span<const Edge> edges);

/// Component id per vertex, numbered in order of each component's smallest
/// vertex.
std::vector<int> component_ids(int n, std::span<const Edge> edges);

bool is_connected(int n, std::span<const Edge> edges);

/// A star: some vertex is incident to every edge (a single edge counts).
bool is_star(std::span<const Edge> edges);

/// Dense n x n lookup of edge indices; -1 where there is no edge.
class EdgeIndex {
 public:
  EdgeIndex(int n, std::span<const Edge> edges);

  int find(int a, int b) const noexcept {
    return table_[a * n_ + b];
  }
  bool contains(int a, int b) const noexcept { return find(a, b) >= 0; }

 private:
  int n_;
  std::vector<int> table_;
};

}  // namespace swapplanarity
