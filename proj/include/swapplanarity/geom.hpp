#pragma once

// Exact predicates over integer grid coordinates.
//
// Every predicate evaluates its determinant in 128-bit integers, so results
// are exact for coordinate magnitudes below 2^30. The playing area itself is a
// grid of at most 2^16 x 2^16 cells; the extra headroom lets callers feed in
// rotated or translated copies without thinking about overflow.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swapplanarity {

inline constexpr std::int64_t kDefaultGridSize = std::int64_t{1} << 16;
inline constexpr std::int64_t kMaxGridSize = std::int64_t{1} << 16;

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

using PointSet = std::vector<GridPoint>;

enum class Orientation : int { kRight = -1, kCollinear = 0, kLeft = 1 };

enum class CirclePosition : int { kOutside = -1, kOn = 0, kInside = 1 };

/// Drawing parameters in grid units. A vertex is a disc of radius `rho`, an
/// edge a rectangle of width `lambda`; `delta` is the clearance enforced
/// between every point and every line through two other points.
struct RenderMetrics {
  std::int64_t rho = 0;
  std::int64_t lambda = 0;
  std::int64_t delta = 0;

  /// lambda < 2 rho < delta, all positive.
  bool valid() const noexcept {
    return rho > 0 && lambda > 0 && lambda < 2 * rho && 2 * rho < delta;
  }

  friend bool operator==(const RenderMetrics&, const RenderMetrics&) = default;
};

/// Sign of (b - a) x (c - a).
Orientation orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) noexcept;

/// True iff the closed segments ab and cd share a point other than a common
/// endpoint of both. Touching at an interior point and collinear overlap
/// count as crossings; two edges meeting only at their shared vertex do not.
bool segments_cross(const GridPoint& a, const GridPoint& b, const GridPoint& c,
                    const GridPoint& d) noexcept;

/// Position of d relative to the circle through a, b, c, independent of the
/// winding of a, b, c. Throws DegenerateTriangle if a, b, c are collinear.
CirclePosition in_circle(const GridPoint& a, const GridPoint& b, const GridPoint& c,
                         const GridPoint& d);

/// dist(r, line(p, q)) >= delta, decided without square roots. Requires p != q.
bool delta_ok(const GridPoint& p, const GridPoint& q, const GridPoint& r,
              std::int64_t delta) noexcept;

/// True iff adding `candidate` next to the accepted pair {p, q} breaks
/// delta-general position for that triple: some point of the three lies closer
/// than delta to the line through the other two. A candidate coinciding with
/// p or q is always a violation.
bool forbidden_region_violated(const GridPoint& p, const GridPoint& q,
                               const GridPoint& candidate, std::int64_t delta) noexcept;

/// Counter-clockwise convex hull as indices into `points`, starting at the
/// lexicographically smallest point. Points lying on a hull edge are kept on
/// the hull. If all points are collinear, returns them in lexicographic order.
std::vector<std::size_t> convex_hull(std::span<const GridPoint> points);

/// Squared Euclidean distance, exact.
__int128 squared_distance(const GridPoint& a, const GridPoint& b) noexcept;

}  // namespace swapplanarity
