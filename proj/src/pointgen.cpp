#include "swapplanarity/pointgen.hpp"

#include <random>
#include <stdexcept>

namespace swapplanarity {

PointGenResult generate_points(const PointGenParams& params) {
  if (params.n < 0) throw std::invalid_argument("generate_points: n must be non-negative");
  if (params.delta <= 0) throw std::invalid_argument("generate_points: delta must be positive");
  if (params.grid_size < 1 || params.grid_size > kMaxGridSize)
    throw std::invalid_argument("generate_points: grid_size must be in [1, 65536]");

  PointGenResult result;
  if (params.threshold < params.n) {
    result.failure = "threshold below n";
    return result;
  }

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::int64_t> coord(0, params.grid_size - 1);

  PointSet accepted;
  accepted.reserve(static_cast<std::size_t>(params.n));
  std::int64_t since_restart = 0;
  while (static_cast<int>(accepted.size()) < params.n) {
    if (since_restart == params.threshold) {
      if (result.stats.restarts == params.max_restarts) {
        result.failure = "no delta-general point set found within the restart budget";
        return result;
      }
      ++result.stats.restarts;
      accepted.clear();
      since_restart = 0;
    }
    ++since_restart;
    ++result.stats.total_attempts;

    const GridPoint candidate{coord(rng), coord(rng)};
    bool rejected = false;
    if (accepted.size() == 1) {
      rejected = candidate == accepted.front();
    } else {
      for (std::size_t i = 0; i < accepted.size() && !rejected; ++i)
        for (std::size_t j = i + 1; j < accepted.size() && !rejected; ++j)
          rejected = forbidden_region_violated(accepted[i], accepted[j], candidate, params.delta);
    }
    if (!rejected) accepted.push_back(candidate);
  }

  result.stats.interior_count = interior_count(accepted);
  result.points = std::move(accepted);
  return result;
}

bool validate_delta_general_position(std::span<const GridPoint> points, std::int64_t delta) {
  const std::size_t n = points.size();
  if (n < 3) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (points[i] == points[j]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (!delta_ok(points[i], points[j], points[k], delta)) return false;
      }
    }
  return true;
}

int interior_count(std::span<const GridPoint> points) {
  if (points.size() < 3) return 0;
  return static_cast<int>(points.size() - convex_hull(points).size());
}

}  // namespace swapplanarity
