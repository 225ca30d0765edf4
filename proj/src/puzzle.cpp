#include "swapplanarity/puzzle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "swapplanarity/pointgen.hpp"

namespace swapplanarity {
namespace {

bool is_permutation_of_range(std::span<const int> values, std::size_t n) {
  if (values.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (const int v : values) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

RenderMetrics fixture_metrics() { return RenderMetrics{800, 600, 2000}; }

constexpr std::int64_t kFixtureCenter = kDefaultGridSize / 2;

}  // namespace

PuzzleInstance apply_swap(const PuzzleInstance& inst, SwapMove move) {
  if (move.edge >= inst.edges.size()) throw std::out_of_range("apply_swap: edge index out of range");
  PuzzleInstance next = inst;
  swap_endpoints(next.assignment, inst.edges[move.edge]);
  return next;
}

PuzzleInstance apply_moves(const PuzzleInstance& inst, std::span<const SwapMove> moves) {
  PuzzleInstance next = inst;
  for (const auto move : moves) {
    if (move.edge >= inst.edges.size())
      throw std::out_of_range("apply_moves: edge index out of range");
    swap_endpoints(next.assignment, inst.edges[move.edge]);
  }
  return next;
}

std::size_t crossing_count(std::span<const GridPoint> points, std::span<const Edge> edges,
                           std::span<const int> assignment) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& a = points[assignment[edges[i].u]];
    const auto& b = points[assignment[edges[i].v]];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (segments_cross(a, b, points[assignment[edges[j].u]], points[assignment[edges[j].v]]))
        ++count;
    }
  }
  return count;
}

std::size_t crossing_count(const PuzzleInstance& inst) {
  return crossing_count(inst.points, inst.edges, inst.assignment);
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const PuzzleInstance& inst) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& p = inst.points;
  const auto& s = inst.assignment;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    for (std::size_t j = i + 1; j < inst.edges.size(); ++j) {
      const auto& f = inst.edges[j];
      if (segments_cross(p[s[e.u]], p[s[e.v]], p[s[f.u]], p[s[f.v]])) out.emplace_back(i, j);
    }
  }
  return out;
}

bool is_solved(const PuzzleInstance& inst) { return crossing_count(inst) == 0; }

std::vector<std::string> validate(const PuzzleInstance& inst) {
  std::vector<std::string> out;
  auto report = [&out](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    out.push_back(os.str());
  };

  if (!is_power_of_two(inst.grid_size) || inst.grid_size > kMaxGridSize)
    report("grid_size ", inst.grid_size, " is not a power of two in [1, 65536]");

  const std::size_t n = inst.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = inst.points[i];
    if (p.x < 0 || p.y < 0 || p.x >= inst.grid_size || p.y >= inst.grid_size)
      report("point ", i, " (", p.x, ", ", p.y, ") lies outside the grid");
  }

  if (inst.assignment.size() != n)
    report("assignment has ", inst.assignment.size(), " entries for ", n, " points");
  else if (!is_permutation_of_range(inst.assignment, n))
    report("assignment is not a permutation of 0..", n - 1);
  if (inst.solution_assignment && !is_permutation_of_range(*inst.solution_assignment, n))
    report("solution_assignment is not a permutation of 0..", n - 1);

  const int vertices = static_cast<int>(inst.assignment.size());
  std::vector<Edge> seen;
  std::vector<char> touched(vertices, 0);
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
      report("edge ", i, " (", e.u, ", ", e.v, ") references a missing vertex");
      continue;
    }
    if (e.u == e.v) {
      report("edge ", i, " is a self-loop at vertex ", e.u);
      continue;
    }
    touched[e.u] = touched[e.v] = 1;
    const Edge key = Edge::of(e.u, e.v);
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      report("edge ", i, " (", key.u, ", ", key.v, ") is a duplicate");
    else
      seen.push_back(key);
  }
  for (int v = 0; v < vertices; ++v)
    if (!touched[v]) report("vertex ", v, " is isolated");

  if (!inst.metrics.valid())
    report("metrics violate 0 < lambda < 2 rho < delta (rho ", inst.metrics.rho, ", lambda ",
           inst.metrics.lambda, ", delta ", inst.metrics.delta, ")");
  if (!validate_delta_general_position(inst.points, inst.metrics.delta))
    report("points are not in delta-general position for delta ", inst.metrics.delta);
  return out;
}

PuzzleInstance canonicalize(PuzzleInstance inst) {
  canonicalize_edges(inst.edges);
  return inst;
}

CrossingTable::CrossingTable(std::span<const GridPoint> points)
    : points_(points.begin(), points.end()),
      n_(static_cast<int>(points.size())),
      pairs_(points.size() * points.size()) {
  if (n_ > 64) return;
  bits_.assign((pairs_ * pairs_ + 63) / 64, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b) continue;
      for (int c = 0; c < n_; ++c)
        for (int d = 0; d < n_; ++d) {
          if (c == d || !segments_cross(points[a], points[b], points[c], points[d])) continue;
          const std::size_t bit = static_cast<std::size_t>(a * n_ + b) * pairs_ +
                                  static_cast<std::size_t>(c * n_ + d);
          bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
    }
}

std::size_t CrossingTable::count(std::span<const Edge> edges,
                                 std::span<const int> assignment) const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = assignment[edges[i].u], b = assignment[edges[i].v];
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      total += cross(a, b, assignment[edges[j].u], assignment[edges[j].v]);
  }
  return total;
}

bool CrossingTable::any(std::span<const Edge> edges, std::span<const int> assignment) const noexcept {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = assignment[edges[i].u], b = assignment[edges[i].v];
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (cross(a, b, assignment[edges[j].u], assignment[edges[j].v])) return true;
  }
  return false;
}

PuzzleInstance make_cycle_fixture(int n) {
  if (n < 4 || n > 12 || n % 2 != 0)
    throw std::invalid_argument("make_cycle_fixture: n must be even and in [4, 12]");

  PuzzleInstance inst;
  const double radius = 24000.0;
  for (int i = 0; i < n; ++i) {
    // Clockwise from the top.
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * i / n;
    inst.points.push_back({kFixtureCenter + std::lround(radius * std::cos(angle)),
                           kFixtureCenter + std::lround(radius * std::sin(angle))});
  }
  for (int v = 0; v + 1 < n; ++v) inst.edges.push_back({v, v + 1});
  inst.edges.push_back({0, n - 1});
  canonicalize_edges(inst.edges);

  const int half = n / 2;
  inst.assignment.resize(n);
  Assignment plane(n);
  for (int v = 0; v < n; ++v) {
    inst.assignment[v] = v < half ? v : n - 1 - (v - half);
    plane[v] = v;
  }
  inst.solution_assignment = plane;
  inst.metrics = fixture_metrics();
  inst.meta = GenerationMeta{n, n, half * (half - 1) / 2, 0, 0, 0};
  return inst;
}

PuzzleInstance make_eight_cycle_fixture() { return make_cycle_fixture(8); }

PuzzleInstance make_basic_construction_fixture() {
  // Unit-square layout scaled by 40000 and offset into the grid; interior
  // points chosen to keep every triple at least 2400 units from collinear.
  constexpr std::int64_t kSide = 40000;
  constexpr std::int64_t kOrigin = (kDefaultGridSize - kSide) / 2;
  auto at = [](std::int64_t x_percent, std::int64_t y_percent) {
    return GridPoint{kOrigin + kSide * x_percent / 100, kOrigin + kSide * y_percent / 100};
  };

  PuzzleInstance inst;
  inst.points = {at(0, 100), at(0, 0), at(86, 64), at(50, 72), at(13, 68), at(100, 0),
                 at(100, 100)};
  for (int v = 0; v < 6; ++v) inst.edges.push_back({v, v + 1});
  inst.assignment = {0, 1, 2, 3, 4, 5, 6};
  inst.solution_assignment = Assignment{1, 0, 2, 3, 4, 5, 6};
  inst.metrics = fixture_metrics();
  inst.meta = GenerationMeta{7, 6, 1, 0, 0, 0};
  return inst;
}

}  // namespace swapplanarity
