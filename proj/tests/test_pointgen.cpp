#include "doctest.h"
#include "oracles.hpp"
#include "swapplanarity/pointgen.hpp"

using namespace swapplanarity;

namespace {

// Exhaustive oracle over ordered triples, independent of the library check.
bool delta_general_oracle(const PointSet& pts, std::int64_t delta) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (pts[i] == pts[j]) return false;
        if (!oracle::delta_ok(pts[i], pts[j], pts[k], delta)) return false;
      }
  return true;
}

PointGenParams params(int n, std::int64_t delta, std::uint64_t seed) {
  PointGenParams p;
  p.n = n;
  p.delta = delta;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("two points always succeed in two attempts") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::int64_t delta : {1, 1000, 65536, 1'000'000}) {
      const auto r = generate_points(params(2, delta, seed));
      REQUIRE(r.ok());
      CHECK(r.stats.total_attempts == 2);
      CHECK(r.stats.restarts == 0);
      CHECK(r.points->at(0) != r.points->at(1));
    }
  }
}

TEST_CASE("an absurd delta fails") {
  auto p = params(3, kDefaultGridSize, 1);
  p.max_restarts = 20;
  const auto r = generate_points(p);
  CHECK_FALSE(r.ok());
  CHECK(r.stats.restarts == 20);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("n = 15 at 3 percent of the grid passes the exhaustive triple check") {
  const std::int64_t delta = 1966;  // round(0.03 * 65536)
  auto p = params(15, delta, 42);
  // Fifteen points this far apart are rare: 500 draws per run almost never
  // suffice, so the budget is widened rather than the seed cherry-picked.
  p.threshold = 500;
  p.max_restarts = 50;
  CHECK_FALSE(generate_points(p).ok());
  p.threshold = 5000;
  p.max_restarts = 1000;
  const auto r = generate_points(p);
  REQUIRE(r.ok());
  CHECK(r.points->size() == 15);
  CHECK(r.stats.total_attempts >= 15);
  CHECK(delta_general_oracle(*r.points, delta));
  CHECK(validate_delta_general_position(*r.points, delta));
}

TEST_CASE("generated sets: validity, spacing, determinism") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 12);
    const std::int64_t delta = 300 + 20 * static_cast<std::int64_t>(seed);
    const auto r = generate_points(params(n, delta, seed));
    REQUIRE(r.ok());
    const PointSet& pts = *r.points;
    CHECK(validate_delta_general_position(pts, delta));
    CHECK(delta_general_oracle(pts, delta));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(pts[i].x >= 0);
      CHECK(pts[i].y >= 0);
      CHECK(pts[i].x < kDefaultGridSize);
      CHECK(pts[i].y < kDefaultGridSize);
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        CHECK(squared_distance(pts[i], pts[j]) > static_cast<__int128>(delta) * delta);
    }
    CHECK(r.stats.interior_count == n - static_cast<int>(oracle::hull_boundary(pts).size()));

    const auto again = generate_points(params(n, delta, seed));
    CHECK(again.points == r.points);
    CHECK(again.stats.total_attempts == r.stats.total_attempts);
    CHECK(again.stats.restarts == r.stats.restarts);
  }
}

TEST_CASE("restart accounting") {
  // Tight threshold forces restarts; attempts are summed across them.
  auto p = params(10, 2500, 3);
  p.threshold = 12;
  p.max_restarts = 100000;
  const auto r = generate_points(p);
  REQUIRE(r.ok());
  CHECK(r.stats.restarts > 0);
  CHECK(r.stats.total_attempts > r.stats.restarts * p.threshold);
  CHECK(r.stats.total_attempts <= (r.stats.restarts + 1) * p.threshold);
}

TEST_CASE("threshold below n fails without sampling") {
  auto p = params(10, 100, 1);
  p.threshold = 9;
  const auto r = generate_points(p);
  CHECK_FALSE(r.ok());
  CHECK(r.stats.total_attempts == 0);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(generate_points(params(-1, 10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(generate_points(params(5, 0, 0)), std::invalid_argument);
  auto p = params(5, 10, 0);
  p.grid_size = kMaxGridSize * 2;
  CHECK_THROWS_AS(generate_points(p), std::invalid_argument);
}

TEST_CASE("validate_delta_general_position small cases") {
  CHECK(validate_delta_general_position(PointSet{{0, 0}, {1, 1}}, 1'000'000));
  CHECK_FALSE(validate_delta_general_position(PointSet{{0, 0}, {5, 5}, {10, 10}}, 1));
  CHECK(validate_delta_general_position(PointSet{{0, 0}, {100, 0}, {50, 100}}, 40));
}

TEST_CASE("mean attempts grow with delta") {
  const int n = 10;
  const std::vector<std::int64_t> deltas{200, 1000, 2000, 3000, 4000};
  std::vector<double> means;
  for (std::int64_t delta : deltas) {
    double sum = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto p = params(n, delta, 10'000 + seed);
      p.threshold = 5000;
      const auto r = generate_points(p);
      REQUIRE(r.ok());
      sum += static_cast<double>(r.stats.total_attempts);
    }
    means.push_back(sum / 100);
  }
  for (std::size_t i = 1; i < means.size(); ++i) {
    INFO("delta " << deltas[i] << " mean " << means[i] << " vs " << means[i - 1]);
    CHECK(means[i] >= 0.95 * means[i - 1]);
  }
  CHECK(means.back() > means.front());
}
