#include "swapplanarity/generate.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "swapplanarity/errors.hpp"

namespace swapplanarity {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum class Stage : std::uint64_t { kPoints = 1, kFlips = 2, kRemoval = 3, kShuffle = 4 };

std::uint64_t stage_seed(std::uint64_t seed, Stage stage) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stage)));
}

}  // namespace

RenderMetrics default_metrics(std::int64_t delta) {
  const std::int64_t rho = 2 * delta / 5;
  return RenderMetrics{rho, rho / 2, delta};
}

RemovalOutcome remove_edges(int n, std::span<const Edge> edges, int m, std::uint64_t seed) {
  if (m < 0 || static_cast<std::size_t>(m) > edges.size())
    throw std::invalid_argument("remove_edges: m must be in [0, |edges|]");

  RemovalOutcome out;
  out.edges.assign(edges.begin(), edges.end());
  auto deg = degrees(n, out.edges);
  std::mt19937_64 rng(seed);
  while (out.edges.size() > static_cast<std::size_t>(m)) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < out.edges.size(); ++i)
      if (deg[out.edges[i].u] >= 2 && deg[out.edges[i].v] >= 2) eligible.push_back(i);
    if (eligible.empty()) {
      out.stuck = true;
      break;
    }
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    const std::size_t victim = eligible[pick(rng)];
    --deg[out.edges[victim].u];
    --deg[out.edges[victim].v];
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  canonicalize_edges(out.edges);
  return out;
}

RemovalOutcome remove_edges(const Triangulation& t, int m, std::uint64_t seed) {
  return remove_edges(static_cast<int>(t.points.size()), t.edges, m, seed);
}

ShuffleOutcome shuffle(const PuzzleInstance& solution, int s, std::uint64_t seed, int max_rounds,
                       std::size_t solver_max_states) {
  if (s < 1) throw std::invalid_argument("shuffle: s must be at least 1");
  if (solution.edges.empty()) throw std::invalid_argument("shuffle: instance has no edges");
  if (!is_solved(solution)) throw GenerationError("shuffle: starting instance is not plane");

  const std::size_t m = solution.edges.size();
  std::mt19937_64 rng(seed);
  ShuffleOutcome out{solution, {}, {}};
  auto random_swap = [&]() {
    std::size_t e;
    if (m == 1 || out.moves.empty()) {
      e = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    } else {
      // Uniform over every edge except the previous one.
      e = std::uniform_int_distribution<std::size_t>(0, m - 2)(rng);
      if (e >= out.moves.back().edge) ++e;
    }
    out.moves.push_back(SwapMove{e});
    swap_endpoints(out.instance.assignment, solution.edges[e]);
  };

  for (int i = 0; i < s; ++i) random_swap();
  SolveOptions options;
  options.max_depth = s;
  options.max_states = solver_max_states;
  for (int round = 0;; ++round) {
    out.report = min_swaps(out.instance, options);
    if (out.report.min_swaps == s) break;
    if (round == max_rounds) {
      std::ostringstream os;
      os << "shuffle: no instance with minimum " << s << " after " << max_rounds
         << " extra swaps; last achieved minimum ";
      if (out.report.found())
        os << *out.report.min_swaps;
      else
        os << "> " << s;
      throw GenerationError(os.str());
    }
    random_swap();
  }
  out.instance.solution_assignment = solution.assignment;
  out.instance.meta.s = s;
  return out;
}

GeneratedLevel generate_level(const GenerationParams& params) {
  if (params.n < 3) throw std::invalid_argument("generate_level: n must be at least 3");
  if (params.s < 1) throw std::invalid_argument("generate_level: s must be at least 1");
  if (params.m < 0 || params.removed < 0 || params.flips < 0)
    throw std::invalid_argument("generate_level: m, removed and flips must be non-negative");
  const RenderMetrics metrics{params.rho, params.lambda, params.delta};
  if (!metrics.valid())
    throw std::invalid_argument("generate_level: need 0 < lambda < 2 rho < delta");

  GeneratedLevel level;
  PointGenParams pg;
  pg.n = params.n;
  pg.delta = params.delta;
  pg.grid_size = params.grid_size;
  pg.threshold = params.threshold;
  pg.max_restarts = params.max_restarts;
  pg.seed = stage_seed(params.seed, Stage::kPoints);
  auto sampled = generate_points(pg);
  level.point_stats = sampled.stats;
  if (!sampled.ok()) throw GenerationError("generate_level: point generation failed: " + sampled.failure);

  const Triangulation triangulation = delaunay(*sampled.points);
  auto flipped = lawson_flips(triangulation, params.flips, stage_seed(params.seed, Stage::kFlips));
  level.flips_performed = flipped.performed;
  const int available = static_cast<int>(flipped.triangulation.edges.size());
  const int m = params.m > 0 ? params.m : available - params.removed;
  if (m < 1 || m > available) {
    std::ostringstream os;
    os << "generate_level: cannot keep " << m << " edges of a triangulation with " << available;
    throw GenerationError(os.str());
  }
  auto kept = remove_edges(flipped.triangulation, m, stage_seed(params.seed, Stage::kRemoval));
  if (kept.stuck) {
    std::ostringstream os;
    os << "generate_level: edge removal stuck at " << kept.edges.size() << " edges (wanted " << m
       << ")";
    throw GenerationError(os.str());
  }

  PuzzleInstance plane;
  plane.grid_size = params.grid_size;
  plane.points = std::move(*sampled.points);
  plane.edges = std::move(kept.edges);
  plane.assignment.resize(params.n);
  for (int v = 0; v < params.n; ++v) plane.assignment[v] = v;
  plane.metrics = metrics;
  plane.meta = GenerationMeta{params.n, m, params.s, params.flips, available - m, params.seed};

  auto shuffled = shuffle(plane, params.s, stage_seed(params.seed, Stage::kShuffle),
                          params.max_shuffle_rounds, params.solver_max_states);
  level.instance = std::move(shuffled.instance);
  level.report = std::move(shuffled.report);
  level.shuffle_moves = std::move(shuffled.moves);
  return level;
}

}  // namespace swapplanarity
