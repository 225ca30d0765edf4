#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swapplanarity/geom.hpp"
#include "swapplanarity/graph.hpp"

namespace swapplanarity {

/// Vertex -> point index. A permutation of 0..n-1 for a valid instance.
using Assignment = std::vector<int>;

struct GenerationMeta {
  int n = 0;
  int m = 0;
  int s = 0;
  int flips = 0;
  int removed = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const GenerationMeta&, const GenerationMeta&) = default;
};

/// A puzzle: fixed points, a graph over vertices, and where each vertex sits.
/// Edges refer to vertices; `assignment[v]` is the point vertex v is drawn on.
struct PuzzleInstance {
  std::int64_t grid_size = kDefaultGridSize;
  PointSet points;
  EdgeList edges;
  Assignment assignment;
  std::optional<Assignment> solution_assignment;
  RenderMetrics metrics;
  GenerationMeta meta;

  int vertex_count() const noexcept { return static_cast<int>(assignment.size()); }

  friend bool operator==(const PuzzleInstance&, const PuzzleInstance&) = default;
};

/// Selecting an edge swaps the points of its endpoints.
struct SwapMove {
  std::size_t edge = 0;

  friend constexpr auto operator<=>(const SwapMove&, const SwapMove&) = default;
};

using MoveSequence = std::vector<SwapMove>;

/// Exchanges the points of the edge's endpoints. Throws std::out_of_range for
/// an invalid edge index.
PuzzleInstance apply_swap(const PuzzleInstance& inst, SwapMove move);

/// In-place variant on a bare assignment; no bounds checking.
inline void swap_endpoints(Assignment& assignment, const Edge& e) noexcept {
  std::swap(assignment[e.u], assignment[e.v]);
}

PuzzleInstance apply_moves(const PuzzleInstance& inst, std::span<const SwapMove> moves);

/// Number of unordered edge pairs whose drawn segments cross.
std::size_t crossing_count(const PuzzleInstance& inst);
std::size_t crossing_count(std::span<const GridPoint> points, std::span<const Edge> edges,
                           std::span<const int> assignment);

/// Edge-index pairs (i < j) whose drawn segments cross, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const PuzzleInstance& inst);

bool is_solved(const PuzzleInstance& inst);

/// Human-readable list of broken instance invariants; empty iff valid.
std::vector<std::string> validate(const PuzzleInstance& inst);

/// Sorts the edge list so it matches the canonical file order.
PuzzleInstance canonicalize(PuzzleInstance inst);

/// Precomputed crossing relation between all point-pair segments, so the
/// search can test a drawn edge pair with a table lookup. The table has n^4
/// bits; above 64 points it falls back to evaluating the predicate.
class CrossingTable {
 public:
  explicit CrossingTable(std::span<const GridPoint> points);

  bool cross(int a, int b, int c, int d) const noexcept {
    if (bits_.empty()) return segments_cross(points_[a], points_[b], points_[c], points_[d]);
    const std::size_t i = static_cast<std::size_t>(a * n_ + b);
    const std::size_t j = static_cast<std::size_t>(c * n_ + d);
    const std::size_t bit = i * pairs_ + j;
    return (bits_[bit >> 6] >> (bit & 63)) & 1U;
  }

  std::size_t count(std::span<const Edge> edges, std::span<const int> assignment) const noexcept;
  bool any(std::span<const Edge> edges, std::span<const int> assignment) const noexcept;

 private:
  PointSet points_;
  int n_;
  std::size_t pairs_;
  std::vector<std::uint64_t> bits_;
};

// Fixtures reproducing small configurations with known answers.

/// Cycle v1..vn on a convex n-gon (n even, >= 4) with exactly one crossing:
/// v1..v(n/2) clockwise on p1..p(n/2), the rest counter-clockwise on the
/// remaining positions, so (v1, vn) crosses (v(n/2), v(n/2+1)).
PuzzleInstance make_cycle_fixture(int n);

/// make_cycle_fixture(8).
PuzzleInstance make_eight_cycle_fixture();

/// Seven-vertex path: v1, v2, v6, v7 are the corners of a square in path
/// order, v3..v5 sit inside, and only (v2, v3) crosses (v5, v6). Swapping
/// either the first or the last edge untangles it.
PuzzleInstance make_basic_construction_fixture();

}  // namespace swapplanarity
