#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "swapplanarity/puzzle.hpp"

namespace swapplanarity {

struct SolveOptions {
  int max_depth = 6;
  // Distinct assignments kept in memory before giving up with
  // SearchLimitExceeded.
  std::size_t max_states = 20'000'000;
  // Minimal sequences listed in the report; the count is always exact.
  std::size_t solution_cap = 64;
};

struct SolveReport {
  std::optional<int> min_swaps;  // empty: nothing plane within `searched_depth`
  int searched_depth = 0;
  std::vector<MoveSequence> solutions;  // lexicographic, at most solution_cap
  std::uint64_t solution_count = 0;     // saturates at UINT64_MAX
  std::uint64_t nodes_expanded = 0;
  std::uint64_t states_visited = 0;
  // Index pairs (i < j) of independent moves within solutions.front().
  std::vector<std::pair<std::size_t, std::size_t>> independent_pairs;

  bool found() const noexcept { return min_swaps.has_value(); }
};

/// Breadth-first search over assignments for the fewest swaps reaching any
/// crossing-free drawing. States are deduplicated on the full assignment and
/// the edge that produced a state is never tried again from it. The depth at
/// which a plane state is first seen is expanded completely so the number of
/// distinct minimal sequences is exact.
///
/// Throws SearchLimitExceeded when more than options.max_states states are
/// stored, std::invalid_argument for a negative depth.
SolveReport min_swaps(const PuzzleInstance& inst, const SolveOptions& options = {});

/// m * (m - 1)^(depth - 1): move sequences of the given length that never
/// repeat an edge twice in a row. Throws std::overflow_error past 2^64 - 1 and
/// std::invalid_argument for m < 1 or depth < 1.
std::uint64_t enumeration_size(std::uint64_t m_edges, int depth);

/// Two swaps are independent when their edges have four distinct endpoints
/// and no other edge joins any two of those four vertices.
bool independent(const PuzzleInstance& inst, SwapMove a, SwapMove b);

struct RoutePlan {
  MoveSequence moves;
  // Swaps spent placing each retired vertex, in retirement order.
  std::vector<std::size_t> phase_lengths;
};

/// Constructive routing to an arbitrary reachable assignment. Per connected
/// component, vertices are retired leaf-first from a BFS spanning tree; each
/// retired vertex is brought onto its target point by swapping along the tree
/// path from the vertex currently occupying that point. At most n(n-1) swaps.
///
/// Throws UnreachableTarget if `target` is not a permutation or would move a
/// point into another component.
RoutePlan route_to_assignment(const PuzzleInstance& inst, std::span<const int> target);

struct SolvabilityResult {
  bool solvable = false;
  std::optional<Assignment> witness;
  std::uint64_t placements_tried = 0;  // backtracking nodes
};

/// Ground-truth oracle for tiny instances: searches every assignment that keeps
/// each component on its current points for one without crossings. Throws
/// EnumerationTooLarge if the product of component factorials exceeds `guard`.
SolvabilityResult exhaustive_solvable(const PuzzleInstance& inst,
                                      std::uint64_t guard = 10'000'000);

}  // namespace swapplanarity
