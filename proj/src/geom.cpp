#include "swapplanarity/geom.hpp"

#include <algorithm>
#include <numeric>

#include "swapplanarity/errors.hpp"

namespace swapplanarity {
namespace {

using i128 = __int128;

i128 cross(const GridPoint& a, const GridPoint& b, const GridPoint& c) noexcept {
  return static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

int sign(i128 v) noexcept { return (v > 0) - (v < 0); }

// p is collinear with ab; is it inside the closed bounding box of ab?
bool within_box(const GridPoint& a, const GridPoint& b, const GridPoint& p) noexcept {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

Orientation orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) noexcept {
  return static_cast<Orientation>(sign(cross(a, b, c)));
}

bool segments_cross(const GridPoint& a, const GridPoint& b, const GridPoint& c,
                    const GridPoint& d) noexcept {
  const bool ac = a == c, ad = a == d, bc = b == c, bd = b == d;
  if ((ac && bd) || (ad && bc)) return true;  // same segment: full overlap
  if (ac || ad || bc || bd) {
    const GridPoint& shared = (ac || ad) ? a : b;
    const GridPoint& p = (ac || ad) ? b : a;
    const GridPoint& q = (ac || bc) ? d : c;
    if (orient(shared, p, q) != Orientation::kCollinear) return false;
    // Collinear through the shared endpoint: they overlap unless they leave it
    // in opposite directions.
    return within_box(shared, p, q) || within_box(shared, q, p);
  }

  const int o1 = sign(cross(a, b, c));
  const int o2 = sign(cross(a, b, d));
  const int o3 = sign(cross(c, d, a));
  const int o4 = sign(cross(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

CirclePosition in_circle(const GridPoint& a, const GridPoint& b, const GridPoint& c,
                         const GridPoint& d) {
  const int turn = sign(cross(a, b, c));
  if (turn == 0) throw DegenerateTriangle("in_circle: triangle vertices are collinear");

  const i128 adx = a.x - d.x, ady = a.y - d.y;
  const i128 bdx = b.x - d.x, bdy = b.y - d.y;
  const i128 cdx = c.x - d.x, cdy = c.y - d.y;
  const i128 alift = adx * adx + ady * ady;
  const i128 blift = bdx * bdx + bdy * bdy;
  const i128 clift = cdx * cdx + cdy * cdy;
  const i128 det = alift * (bdx * cdy - bdy * cdx) - blift * (adx * cdy - ady * cdx) +
                   clift * (adx * bdy - ady * bdx);
  return static_cast<CirclePosition>(sign(det) * turn);
}

bool delta_ok(const GridPoint& p, const GridPoint& q, const GridPoint& r,
              std::int64_t delta) noexcept {
  const i128 area = cross(p, q, r);
  const i128 base = squared_distance(p, q);
  const i128 d = delta;
  return area * area >= d * d * base;
}

bool forbidden_region_violated(const GridPoint& p, const GridPoint& q,
                               const GridPoint& candidate, std::int64_t delta) noexcept {
  if (candidate == p || candidate == q) return true;
  return !delta_ok(p, q, candidate, delta) || !delta_ok(p, candidate, q, delta) ||
         !delta_ok(q, candidate, p, delta);
}

std::vector<std::size_t> convex_hull(std::span<const GridPoint> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
  if (order.size() < 3) return order;

  const bool all_collinear = std::all_of(order.begin() + 2, order.end(), [&](std::size_t i) {
    return orient(points[order[0]], points[order[1]], points[i]) == Orientation::kCollinear;
  });
  if (all_collinear) return order;

  // Monotone chain; popping only on strict right turns keeps boundary points.
  std::vector<std::size_t> hull;
  auto build = [&](auto first, auto last) {
    const std::size_t base = hull.size();
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= base + 2 &&
             orient(points[hull[hull.size() - 2]], points[hull.back()], points[*it]) ==
                 Orientation::kRight) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(order.begin(), order.end());
  build(order.rbegin(), order.rend());
  return hull;
}

__int128 squared_distance(const GridPoint& a, const GridPoint& b) noexcept {
  const i128 dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace swapplanarity
