#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "swapplanarity/geom.hpp"

namespace swapplanarity {

struct PointGenParams {
  int n = 0;
  std::int64_t delta = 1;
  std::int64_t grid_size = kDefaultGridSize;
  // Candidate draws allowed since the last restart before starting over.
  std::int64_t threshold = 500;
  std::uint64_t seed = 0;
  int max_restarts = 1000;
};

struct PointGenStats {
  std::int64_t total_attempts = 0;  // summed over all restarts
  int restarts = 0;
  int interior_count = 0;  // n - hull size; 0 on failure
};

struct PointGenResult {
  std::optional<PointSet> points;  // empty on failure
  PointGenStats stats;
  std::string failure;  // reason when `points` is empty

  bool ok() const noexcept { return points.has_value(); }
};

/// Rejection-samples n points, uniform on the grid square, in delta-general
/// position. Every candidate draw counts as one attempt; once `threshold`
/// draws have been spent since the last restart the accepted set is discarded
/// and sampling starts over. Gives up after `max_restarts` restarts.
///
/// A threshold below n can never succeed and is reported as a failure without
/// sampling. Throws std::invalid_argument for n < 0, delta <= 0, or a grid
/// size outside [1, 2^16].
PointGenResult generate_points(const PointGenParams& params);

/// Exhaustive O(n^3) check that every point is at least delta from the line
/// through every other pair. Sets with duplicate points fail (for n >= 3).
bool validate_delta_general_position(std::span<const GridPoint> points, std::int64_t delta);

/// Number of points strictly inside the convex hull.
int interior_count(std::span<const GridPoint> points);

}  // namespace swapplanarity
