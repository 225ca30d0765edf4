#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "swapplanarity/generate.hpp"
#include "swapplanarity/pointgen.hpp"
#include "swapplanarity/puzzle.hpp"

namespace testing_support {

namespace sp = swapplanarity;

inline sp::PointSet random_points(int n, std::uint64_t seed, std::int64_t delta = 600) {
  sp::PointGenParams p;
  p.n = n;
  p.delta = delta;
  p.seed = seed;
  p.threshold = 20000;
  auto r = sp::generate_points(p);
  if (!r.ok()) throw std::runtime_error("random_points: " + r.failure);
  return *r.points;
}

/// Random spanning tree plus `extra` random chords: connected, simple.
inline sp::EdgeList random_connected_graph(int n, int extra, std::mt19937_64& rng) {
  std::set<sp::Edge> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.insert(sp::Edge::of(order[i], order[pick(rng)]));
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (int k = 0; k < extra && edges.size() < max_edges; ++k) {
    int a = vertex(rng), b = vertex(rng);
    while (a == b) b = vertex(rng);
    edges.insert(sp::Edge::of(a, b));
  }
  return {edges.begin(), edges.end()};
}

inline sp::Assignment identity(int n) {
  sp::Assignment a(n);
  std::iota(a.begin(), a.end(), 0);
  return a;
}

inline sp::PuzzleInstance make_instance(sp::PointSet points, sp::EdgeList edges,
                                        sp::Assignment assignment, std::int64_t delta = 600) {
  sp::PuzzleInstance inst;
  inst.points = std::move(points);
  inst.edges = std::move(edges);
  sp::canonicalize_edges(inst.edges);
  inst.assignment = std::move(assignment);
  inst.metrics = sp::default_metrics(delta);
  inst.meta.n = static_cast<int>(inst.points.size());
  inst.meta.m = static_cast<int>(inst.edges.size());
  return inst;
}

/// Random connected instance on random points with a random assignment.
inline sp::PuzzleInstance random_instance(int n, int extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto points = random_points(n, seed);
  auto edges = random_connected_graph(n, extra, rng);
  auto sigma = identity(n);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return make_instance(std::move(points), std::move(edges), std::move(sigma));
}

}  // namespace testing_support
