#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "swapplanarity/errors.hpp"
#include "swapplanarity/solve.hpp"

using namespace swapplanarity;
using testing_support::identity;
using testing_support::make_instance;
using testing_support::random_instance;

namespace {

// Memoized plane test on the oracle's exact crossing count.
struct PlaneMemo {
  const PuzzleInstance* inst;
  std::map<std::vector<int>, bool> cache;
  bool operator()(const std::vector<int>& sigma) {
    auto it = cache.find(sigma);
    if (it != cache.end()) return it->second;
    const bool plane = oracle::crossings(*inst, sigma) == 0;
    cache.emplace(sigma, plane);
    return plane;
  }
};

void check_report_sequences(const PuzzleInstance& inst, const SolveReport& r) {
  REQUIRE(r.found());
  CHECK(r.solutions.size() == std::min<std::uint64_t>(r.solution_count, 64));
  for (const auto& seq : r.solutions) {
    CHECK(static_cast<int>(seq.size()) == *r.min_swaps);
    CHECK(is_solved(apply_moves(inst, seq)));
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] != seq[i - 1]);
  }
  CHECK(std::is_sorted(r.solutions.begin(), r.solutions.end()));
  CHECK(std::adjacent_find(r.solutions.begin(), r.solutions.end()) == r.solutions.end());
  for (auto [a, b] : r.independent_pairs) {
    CHECK(a < b);
    CHECK(independent(inst, r.solutions.front()[a], r.solutions.front()[b]));
  }
}

}  // namespace

TEST_CASE("eight-cycle needs six swaps") {
  const PuzzleInstance inst = make_eight_cycle_fixture();
  const SolveReport r = min_swaps(inst, {6});
  REQUIRE(r.min_swaps == 6);
  CHECK(r.nodes_expanded < 1'000'000);
  check_report_sequences(inst, r);

  const SolveReport shallow = min_swaps(inst, {5});
  CHECK_FALSE(shallow.found());
  CHECK(shallow.searched_depth == 5);
}

TEST_CASE("cycle lower bound family") {
  for (int n : {4, 6}) {
    const PuzzleInstance inst = make_cycle_fixture(n);
    const int expected = (n / 2) * (n / 2 - 1) / 2;
    const SolveReport r = min_swaps(inst, {expected + 1});
    CHECK(r.min_swaps == expected);
    PlaneMemo memo{&inst, {}};
    const auto id = oracle::iterative_deepening(inst, expected, memo);
    CHECK(id.min_swaps == expected);
    CHECK(id.sequences == r.solution_count);
  }
}

TEST_CASE("basic construction: one swap, two ways") {
  const PuzzleInstance inst = make_basic_construction_fixture();
  const SolveReport r = min_swaps(inst, {3});
  REQUIRE(r.min_swaps == 1);
  CHECK(r.solution_count == 2);
  REQUIRE(r.solutions.size() == 2);
  CHECK(r.solutions[0] == MoveSequence{SwapMove{0}});
  CHECK(r.solutions[1] == MoveSequence{SwapMove{5}});
}

TEST_CASE("solved instance needs zero swaps") {
  PuzzleInstance inst = make_eight_cycle_fixture();
  inst.assignment = *inst.solution_assignment;
  const SolveReport r = min_swaps(inst, {0});
  CHECK(r.min_swaps == 0);
  CHECK(r.solution_count == 1);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].empty());
}

TEST_CASE("breadth-first search agrees with iterative deepening") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const PuzzleInstance inst = random_instance(n, static_cast<int>(seed % 3), seed);
    const int depth = n <= 6 ? 4 : 3;
    const SolveReport r = min_swaps(inst, {depth});
    PlaneMemo memo{&inst, {}};
    const auto id = oracle::iterative_deepening(inst, depth, memo);
    INFO("seed " << seed);
    if (id.min_swaps < 0) {
      CHECK_FALSE(r.found());
      continue;
    }
    ++compared;
    REQUIRE(r.min_swaps == id.min_swaps);
    CHECK(r.solution_count == id.sequences);
    check_report_sequences(inst, r);
    std::uint64_t bound = 0;
    for (int d = 1; d <= id.min_swaps; ++d) bound += enumeration_size(inst.edges.size(), d);
    CHECK(r.nodes_expanded <= std::max<std::uint64_t>(bound, 1));
  }
  CHECK(compared > 40);
}

TEST_CASE("search limits") {
  const PuzzleInstance inst = make_eight_cycle_fixture();
  SolveOptions tiny;
  tiny.max_depth = 6;
  tiny.max_states = 50;
  CHECK_THROWS_AS(min_swaps(inst, tiny), SearchLimitExceeded);
  CHECK_THROWS_AS(min_swaps(inst, {-1}), std::invalid_argument);
}

TEST_CASE("enumeration size") {
  CHECK(enumeration_size(20, 4) == 137'180);
  CHECK(enumeration_size(7, 1) == 7);
  CHECK(enumeration_size(2, 3) == 2);
  CHECK(enumeration_size(1, 5) == 0);
  CHECK_THROWS_AS(enumeration_size(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumeration_size(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumeration_size(1'000'000, 10), std::overflow_error);
}

TEST_CASE("independent swaps") {
  const PointSet pts = testing_support::random_points(6, 1);
  const auto path = make_instance(pts, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, identity(6));
  // Edge indices after sorting: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,4) 4:(4,5)
  CHECK_FALSE(independent(path, SwapMove{0}, SwapMove{1}));
  CHECK_FALSE(independent(path, SwapMove{0}, SwapMove{2}));  // (1,2) joins them
  CHECK(independent(path, SwapMove{0}, SwapMove{3}));
  CHECK(independent(path, SwapMove{0}, SwapMove{4}));
  CHECK_FALSE(independent(path, SwapMove{2}, SwapMove{2}));
}

TEST_CASE("router: identity target needs no moves") {
  const PuzzleInstance inst = random_instance(8, 3, 5);
  const RoutePlan plan = route_to_assignment(inst, inst.assignment);
  CHECK(plan.moves.empty());
}

TEST_CASE("router: three-vertex path") {
  const PointSet pts{{0, 0}, {30000, 500}, {60000, 0}};
  const PuzzleInstance inst = make_instance(pts, {{0, 1}, {1, 2}}, identity(3), 100);
  // Bring vertex 0 onto point 2, two hops away, keeping the other order.
  const std::vector<int> target{2, 0, 1};
  const RoutePlan plan = route_to_assignment(inst, target);
  CHECK(apply_moves(inst, plan.moves).assignment == target);
  CHECK(plan.moves.size() == 2);
}

TEST_CASE("router: random reachable targets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const PuzzleInstance inst = random_instance(n, trial % 4, 1000 + trial);
    auto target = inst.assignment;
    std::shuffle(target.begin(), target.end(), rng);
    const RoutePlan plan = route_to_assignment(inst, target);
    CHECK(apply_moves(inst, plan.moves).assignment == target);
    CHECK(plan.moves.size() <= static_cast<std::size_t>(n * (n - 1)));
    std::size_t total = 0;
    for (auto len : plan.phase_lengths) {
      CHECK(len <= static_cast<std::size_t>(n - 1));
      total += len;
    }
    CHECK(total == plan.moves.size());
  }
}

TEST_CASE("router: disconnected graphs and unreachable targets") {
  const PointSet pts = testing_support::random_points(6, 21);
  const PuzzleInstance inst =
      make_instance(pts, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {5, 4, 3, 2, 1, 0});
  const std::vector<int> ok{3, 5, 4, 0, 2, 1};
  CHECK(apply_moves(inst, route_to_assignment(inst, ok).moves).assignment == ok);
  const std::vector<int> crosses_components{0, 4, 3, 5, 2, 1};
  CHECK_THROWS_AS(route_to_assignment(inst, crosses_components), UnreachableTarget);
  CHECK_THROWS_AS(route_to_assignment(inst, std::vector<int>{0, 1, 2}), UnreachableTarget);
  CHECK_THROWS_AS(route_to_assignment(inst, std::vector<int>{0, 0, 1, 2, 3, 4}), UnreachableTarget);
}

TEST_CASE("exhaustive solvability") {
  SUBCASE("K5 has no plane drawing") {
    const PointSet pts = testing_support::random_points(5, 8);
    EdgeList k5;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) k5.push_back({a, b});
    const auto r = exhaustive_solvable(make_instance(pts, k5, identity(5)));
    CHECK_FALSE(r.solvable);
    CHECK_FALSE(r.witness.has_value());
  }
  SUBCASE("crossed four-cycle on convex points") {
    const PointSet pts{{0, 0}, {40000, 0}, {40000, 40000}, {0, 40000}};
    // Cycle 0-1-2-3-0 drawn with 1 and 2 exchanged: the two diagonals cross.
    const auto inst = make_instance(pts, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {0, 2, 1, 3}, 1000);
    REQUIRE(crossing_count(inst) > 0);
    const auto r = exhaustive_solvable(inst);
    REQUIRE(r.solvable);
    PuzzleInstance w = inst;
    w.assignment = *r.witness;
    CHECK(is_solved(w));
  }
  SUBCASE("fixtures are solvable") {
    CHECK(exhaustive_solvable(make_eight_cycle_fixture()).solvable);
    CHECK(exhaustive_solvable(make_basic_construction_fixture()).solvable);
  }
  SUBCASE("size guard") {
    const PuzzleInstance inst = random_instance(12, 2, 4);
    CHECK_THROWS_AS(exhaustive_solvable(inst, 1000), EnumerationTooLarge);
  }
  SUBCASE("agrees with brute force over all permutations") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const PuzzleInstance inst = random_instance(6, 3 + static_cast<int>(seed % 6), 500 + seed);
      std::vector<int> sigma = identity(6);
      bool any = false;
      do any = any || oracle::crossings(inst, sigma) == 0;
      while (!any && std::next_permutation(sigma.begin(), sigma.end()));
      CHECK(exhaustive_solvable(inst).solvable == any);
    }
  }
}
