#pragma once

#include <cstdint>
#include <span>

#include "swapplanarity/pointgen.hpp"
#include "swapplanarity/puzzle.hpp"
#include "swapplanarity/solve.hpp"
#include "swapplanarity/triangulate.hpp"

namespace swapplanarity {

struct GenerationParams {
  int n = 11;
  // Target edge count. When 0, `removed` edges are taken out of the flipped
  // triangulation instead.
  int m = 0;
  int removed = 0;
  int s = 2;
  std::int64_t delta = 1966;  // round(0.03 * 65536)
  std::int64_t rho = 786;
  std::int64_t lambda = 393;
  int flips = 3;
  std::int64_t grid_size = kDefaultGridSize;
  std::int64_t threshold = 500;
  int max_restarts = 1000;
  std::uint64_t seed = 0;
  int max_shuffle_rounds = 50;
  std::size_t solver_max_states = 20'000'000;
};

/// Default rho and lambda for a given delta: rho = 2 delta / 5, lambda = rho / 2.
RenderMetrics default_metrics(std::int64_t delta);

struct RemovalOutcome {
  EdgeList edges;
  bool stuck = false;  // fewer edges removable than requested
};

/// Removes uniformly random edges, never one with a degree-1 endpoint, until
/// m remain. Reports `stuck` with the best effort if no eligible edge is left.
/// Throws std::invalid_argument if m exceeds the edge count or is negative.
RemovalOutcome remove_edges(int n, std::span<const Edge> edges, int m, std::uint64_t seed);
RemovalOutcome remove_edges(const Triangulation& t, int m, std::uint64_t seed);

struct ShuffleOutcome {
  PuzzleInstance instance;
  MoveSequence moves;  // every swap applied, in order
  SolveReport report;  // verification of the returned instance
};

/// Applies s random swaps (never the same edge twice in a row) to a plane
/// instance, then verifies with min_swaps at depth s. While the verified
/// minimum falls short of s, one more random swap is added and the instance
/// retested, up to `max_rounds` extra swaps. The plane starting assignment is
/// recorded as solution_assignment.
///
/// Throws GenerationError if the budget runs out or the input is not plane,
/// std::invalid_argument for s < 1 or an empty edge list.
ShuffleOutcome shuffle(const PuzzleInstance& solution, int s, std::uint64_t seed, int max_rounds,
                       std::size_t solver_max_states = 20'000'000);

struct GeneratedLevel {
  PuzzleInstance instance;
  PointGenStats point_stats;
  SolveReport report;
  MoveSequence shuffle_moves;
  int flips_performed = 0;
};

/// Points -> Delaunay -> Lawson flips -> edge removal -> shuffle. Every stage
/// draws from its own seed derived from params.seed, so a seed reproduces the
/// level byte for byte. Throws GenerationError on any stage failure and
/// std::invalid_argument for inconsistent parameters.
GeneratedLevel generate_level(const GenerationParams& params);

}  // namespace swapplanarity
