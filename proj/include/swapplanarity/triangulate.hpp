#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "swapplanarity/geom.hpp"
#include "swapplanarity/graph.hpp"

namespace swapplanarity {

/// A triangulation of a point set: every triangle is counter-clockwise, edges
/// are sorted and normalized.
struct Triangulation {
  PointSet points;
  EdgeList edges;
  std::vector<std::array<int, 3>> triangles;
};

/// Delaunay triangulation. Built by inserting points in lexicographic order
/// against the running convex hull, then flipping every edge whose opposite
/// vertex lies strictly inside the neighbouring circumcircle. Cocircular
/// configurations are left alone, so one of the valid diagonals is kept.
///
/// Throws std::invalid_argument for fewer than 3 points, duplicate points,
/// all points collinear, or a new point collinear with a visible hull edge.
Triangulation delaunay(std::span<const GridPoint> points);

/// True iff no point lies strictly inside the circumcircle of any triangle.
bool empty_circumcircle_audit(const Triangulation& t);

struct FlipOutcome {
  Triangulation triangulation;
  int performed = 0;  // < requested only if the skip bound was hit
};

/// Randomized Lawson flips: repeatedly pick a uniformly random internal edge
/// and flip it if its two triangles form a strictly convex quadrilateral. A
/// non-flippable pick costs nothing; after 100 * |edges| consecutive
/// non-flippable picks the routine gives up and reports the partial count.
FlipOutcome lawson_flips(const Triangulation& t, int count, std::uint64_t seed);

/// Flips one internal edge. Throws std::invalid_argument if `e` is not an
/// internal edge or its quadrilateral is not strictly convex.
Triangulation flip_edge(const Triangulation& t, Edge e);

}  // namespace swapplanarity
