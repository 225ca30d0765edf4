#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "swapplanarity/errors.hpp"
#include "swapplanarity/geom.hpp"
#include "swapplanarity/puzzle.hpp"

using namespace swapplanarity;

namespace {

GridPoint random_point(std::mt19937_64& rng, std::int64_t size) {
  std::uniform_int_distribution<std::int64_t> c(0, size - 1);
  return {c(rng), c(rng)};
}

}  // namespace

TEST_CASE("orient on small triangles") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::kLeft);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::kCollinear);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == Orientation::kRight);
}

TEST_CASE("segments_cross contact rules") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {0, 0}, {0, 1}));
  CHECK(segments_cross({0, 0}, {4, 0}, {2, 0}, {2, -2}));
  SUBCASE("collinear overlap counts, collinear end-to-end does not") {
    CHECK(segments_cross({0, 0}, {4, 0}, {2, 0}, {6, 0}));
    CHECK(segments_cross({0, 0}, {4, 0}, {0, 0}, {2, 0}));
    CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {2, 0}, {5, 0}));
    CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {3, 0}, {5, 0}));
  }
  SUBCASE("parallel and disjoint") {
    CHECK_FALSE(segments_cross({0, 0}, {4, 0}, {0, 1}, {4, 1}));
    CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {3, 0}, {5, -4}));
  }
}

TEST_CASE("in_circle against a known circle") {
  const GridPoint a{0, 0}, b{4, 0}, c{0, 4};
  CHECK(in_circle(a, b, c, {1, 1}) == CirclePosition::kInside);
  CHECK(in_circle(a, b, c, {4, 4}) == CirclePosition::kOn);
  CHECK(in_circle(a, b, c, {10, 10}) == CirclePosition::kOutside);
  CHECK(in_circle(a, c, b, {1, 1}) == CirclePosition::kInside);
  CHECK_THROWS_AS(in_circle({0, 0}, {1, 1}, {2, 2}, {5, 0}), DegenerateTriangle);
}

TEST_CASE("delta_ok distances") {
  CHECK(delta_ok({0, 0}, {100, 0}, {50, 50}, 10));
  CHECK_FALSE(delta_ok({0, 0}, {100, 0}, {50, 5}, 10));
  CHECK(delta_ok({0, 0}, {100, 0}, {50, 10}, 10));
}

TEST_CASE("forbidden region") {
  CHECK(forbidden_region_violated({0, 0}, {100, 0}, {50, 5}, 10));
  CHECK_FALSE(forbidden_region_violated({0, 0}, {100, 0}, {50, 500}, 10));
  // q sits close to the long line from p to the candidate.
  const GridPoint p{0, 0}, q{10, 0}, cand{5000, 40};
  CHECK(oracle::line_distance_sq(p, cand, q) < oracle::Rat(100));
  CHECK(oracle::line_distance_sq(p, q, cand) >= oracle::Rat(100));
  CHECK(forbidden_region_violated(p, q, cand, 10));
  CHECK(forbidden_region_violated(p, q, p, 10));
}

TEST_CASE("forbidden region equals failing one of the three distance checks") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t size = i % 2 ? 400 : 65536;
    const GridPoint p = random_point(rng, size), q = random_point(rng, size),
                    c = random_point(rng, size);
    if (p == q || p == c || q == c) continue;
    const std::int64_t delta = std::uniform_int_distribution<std::int64_t>(1, size / 8)(rng);
    const bool expected = !oracle::delta_ok(p, q, c, delta) || !oracle::delta_ok(p, c, q, delta) ||
                          !oracle::delta_ok(q, c, p, delta);
    CHECK(forbidden_region_violated(p, q, c, delta) == expected);
  }
}

TEST_CASE("convex hull") {
  const PointSet square{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 5}};
  auto hull = convex_hull(square);
  CHECK(hull.size() == 4);
  CHECK(std::find(hull.begin(), hull.end(), 4) == hull.end());

  const PointSet tri{{0, 0}, {5, 1}, {2, 7}};
  CHECK(convex_hull(tri).size() == 3);

  const auto octagon = make_eight_cycle_fixture().points;
  CHECK(convex_hull(octagon).size() == 8);

  SUBCASE("counter-clockwise from the lexicographically smallest point") {
    const PointSet pts{{5, 5}, {0, 10}, {10, 10}, {10, 0}, {0, 0}};
    const auto h = convex_hull(pts);
    REQUIRE(h.size() == 4);
    CHECK(pts[h[0]] == GridPoint{0, 0});
    for (std::size_t i = 0; i < h.size(); ++i)
      CHECK(orient(pts[h[i]], pts[h[(i + 1) % 4]], pts[h[(i + 2) % 4]]) == Orientation::kLeft);
  }
  SUBCASE("collinear boundary points stay on the hull") {
    const PointSet pts{{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}};
    CHECK(convex_hull(pts).size() == 5);
  }
  SUBCASE("single point") { CHECK(convex_hull(PointSet{{3, 4}}).size() == 1); }
}

TEST_CASE("convex hull matches the brute-force boundary on random sets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t size = trial % 2 ? 12 : 65536;
    const int n = std::uniform_int_distribution<int>(3, 25)(rng);
    std::set<GridPoint> unique;
    while (static_cast<int>(unique.size()) < n) unique.insert(random_point(rng, size));
    const PointSet pts(unique.begin(), unique.end());
    bool all_collinear = true;
    for (std::size_t k = 2; k < pts.size(); ++k)
      all_collinear = all_collinear && orient(pts[0], pts[1], pts[k]) == Orientation::kCollinear;
    if (all_collinear) continue;
    const auto hull = convex_hull(pts);
    const std::set<std::size_t> got(hull.begin(), hull.end());
    CHECK(got.size() == hull.size());
    CHECK(got == oracle::hull_boundary(pts));
  }
}

TEST_CASE("predicate properties on random inputs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t size = i % 3 == 0 ? 16 : 65536;
    const GridPoint a = random_point(rng, size), b = random_point(rng, size),
                    c = random_point(rng, size), d = random_point(rng, size);

    CHECK(static_cast<int>(orient(a, b, c)) == -static_cast<int>(orient(a, c, b)));
    CHECK(static_cast<int>(orient(a, b, c)) == oracle::orient(a, b, c));

    if (a != b && c != d) {
      const bool x = segments_cross(a, b, c, d);
      CHECK(x == segments_cross(c, d, a, b));
      CHECK(x == segments_cross(b, a, c, d));
      CHECK(x == segments_cross(a, b, d, c));
      CHECK(x == oracle::segments_cross(a, b, c, d));
    }

    if (a != b) {
      const std::int64_t delta = std::uniform_int_distribution<std::int64_t>(0, size / 4)(rng);
      CHECK(delta_ok(a, b, c, delta) == oracle::delta_ok(a, b, c, delta));
      if (orient(a, b, c) != Orientation::kCollinear) CHECK(delta_ok(a, b, c, 0));
    }

    if (orient(a, b, c) != Orientation::kCollinear) {
      const CirclePosition pos = in_circle(a, b, c, d);
      CHECK(static_cast<int>(pos) == oracle::in_circle(a, b, c, d));
      CHECK(pos == in_circle(b, c, a, d));
      CHECK(pos == in_circle(c, a, b, d));
      CHECK(pos == in_circle(b, a, c, d));
    }
  }
}

TEST_CASE("predicates stay exact near the coordinate limit") {
  const std::int64_t big = (std::int64_t{1} << 30) - 1;
  CHECK(orient({0, 0}, {big, big - 1}, {big - 1, big - 2}) ==
        static_cast<Orientation>(oracle::orient({0, 0}, {big, big - 1}, {big - 1, big - 2})));
  const GridPoint a{-big, -big}, b{big, -big}, c{big, big}, d{-big, big - 1};
  CHECK(static_cast<int>(in_circle(a, b, c, d)) == oracle::in_circle(a, b, c, d));
  CHECK(in_circle(a, b, c, {-big, big}) == CirclePosition::kOn);
}
