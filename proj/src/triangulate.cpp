#include "swapplanarity/triangulate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace swapplanarity {
namespace {

// Edge -> apex vertices. For the normalized edge (u, v), slot 0 holds the apex
// of the triangle left of u->v and slot 1 the one to its right; -1 on the hull.
class Mesh {
 public:
  explicit Mesh(std::span<const GridPoint> points) : points_(points) {}

  void add_triangle(int a, int b, int c) {
    set_apex(a, b, c);
    set_apex(b, c, a);
    set_apex(c, a, b);
  }

  void remove_triangle(int a, int b, int c) {
    clear_apex(a, b);
    clear_apex(b, c);
    clear_apex(c, a);
  }

  // Apex left of the directed edge a->b, or -1.
  int apex_left(int a, int b) const {
    const auto it = apex_.find(Edge::of(a, b));
    if (it == apex_.end()) return -1;
    return a < b ? it->second[0] : it->second[1];
  }

  bool internal(Edge e) const {
    const auto it = apex_.find(e);
    return it != apex_.end() && it->second[0] >= 0 && it->second[1] >= 0;
  }

  bool flippable(Edge e) const {
    if (!internal(e)) return false;
    const int left = apex_left(e.u, e.v), right = apex_left(e.v, e.u);
    const auto su = orient(points_[left], points_[right], points_[e.u]);
    const auto sv = orient(points_[left], points_[right], points_[e.v]);
    return su != Orientation::kCollinear && sv != Orientation::kCollinear && su != sv;
  }

  // Requires flippable(e). Returns the new diagonal.
  Edge flip(Edge e) {
    const int u = e.u, v = e.v;
    const int left = apex_left(u, v), right = apex_left(v, u);
    remove_triangle(u, v, left);
    remove_triangle(v, u, right);
    // Quadrilateral u, right, v, left is counter-clockwise.
    add_triangle(u, right, left);
    add_triangle(right, v, left);
    return Edge::of(left, right);
  }

  bool locally_delaunay(Edge e) const {
    if (!internal(e)) return true;
    const int left = apex_left(e.u, e.v), right = apex_left(e.v, e.u);
    return in_circle(points_[e.u], points_[e.v], points_[left], points_[right]) !=
           CirclePosition::kInside;
  }

  EdgeList edges() const {
    EdgeList out;
    out.reserve(apex_.size());
    for (const auto& [e, slots] : apex_) out.push_back(e);
    return out;
  }

  std::vector<std::array<int, 3>> triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const auto& [e, slots] : apex_) {
      // Report each triangle once, from its edge whose smallest vertex is u
      // and whose apex is larger than both endpoints.
      for (int side = 0; side < 2; ++side) {
        const int w = slots[side];
        if (w < 0 || w < e.v) continue;
        out.push_back(side == 0 ? std::array<int, 3>{e.u, e.v, w}
                                : std::array<int, 3>{e.u, w, e.v});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void set_apex(int a, int b, int c) {
    auto& slots = apex_.try_emplace(Edge::of(a, b), std::array<int, 2>{-1, -1}).first->second;
    slots[a < b ? 0 : 1] = c;
  }

  void clear_apex(int a, int b) {
    const auto it = apex_.find(Edge::of(a, b));
    if (it == apex_.end()) return;
    it->second[a < b ? 0 : 1] = -1;
    if (it->second[0] < 0 && it->second[1] < 0) apex_.erase(it);
  }

  std::span<const GridPoint> points_;
  std::map<Edge, std::array<int, 2>> apex_;
};

Triangulation snapshot(std::span<const GridPoint> points, const Mesh& mesh) {
  return Triangulation{PointSet(points.begin(), points.end()), mesh.edges(), mesh.triangles()};
}

Mesh rebuild(const Triangulation& t) {
  Mesh mesh(t.points);
  for (const auto& tri : t.triangles) mesh.add_triangle(tri[0], tri[1], tri[2]);
  return mesh;
}

}  // namespace

Triangulation delaunay(std::span<const GridPoint> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw std::invalid_argument("delaunay: need at least 3 points");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return points[i] < points[j]; });
  for (int i = 1; i < n; ++i)
    if (points[order[i - 1]] == points[order[i]])
      throw std::invalid_argument("delaunay: duplicate points");

  // Seed triangle: the first two points plus the first point off their line.
  std::size_t third = 2;
  while (third < order.size() && orient(points[order[0]], points[order[1]],
                                        points[order[third]]) == Orientation::kCollinear)
    ++third;
  if (third == order.size()) throw std::invalid_argument("delaunay: all points are collinear");
  if (third != 2) throw std::invalid_argument("delaunay: collinear points on the initial hull");

  Mesh mesh(points);
  std::vector<int> hull{order[0], order[1], order[2]};
  if (orient(points[hull[0]], points[hull[1]], points[hull[2]]) == Orientation::kRight)
    std::swap(hull[1], hull[2]);
  mesh.add_triangle(hull[0], hull[1], hull[2]);

  for (std::size_t k = 3; k < order.size(); ++k) {
    const int p = order[k];
    const std::size_t h = hull.size();
    std::vector<char> visible(h);
    for (std::size_t i = 0; i < h; ++i) {
      const auto o = orient(points[hull[i]], points[hull[(i + 1) % h]], points[p]);
      if (o == Orientation::kCollinear)
        throw std::invalid_argument("delaunay: point collinear with a hull edge");
      visible[i] = o == Orientation::kRight;
    }
    // The visible edges form one cyclic run; find where it starts.
    std::size_t start = h;
    for (std::size_t i = 0; i < h; ++i)
      if (visible[i] && !visible[(i + h - 1) % h]) {
        start = i;
        break;
      }
    if (start == h) throw std::logic_error("delaunay: new point sees no hull edge");

    std::vector<int> next_hull;
    std::size_t i = start;
    while (visible[i]) {
      mesh.add_triangle(hull[(i + 1) % h], hull[i], p);
      i = (i + 1) % h;
    }
    // hull[start .. i] is replaced by hull[start], p, hull[i].
    next_hull.push_back(p);
    for (std::size_t j = i;; j = (j + 1) % h) {
      next_hull.push_back(hull[j]);
      if (j == start) break;
    }
    hull = std::move(next_hull);
  }

  std::vector<Edge> pending = mesh.edges();
  while (!pending.empty()) {
    const Edge e = pending.back();
    pending.pop_back();
    if (mesh.locally_delaunay(e)) continue;
    const int left = mesh.apex_left(e.u, e.v), right = mesh.apex_left(e.v, e.u);
    mesh.flip(e);
    for (const Edge& neighbour : {Edge::of(e.u, left), Edge::of(left, e.v), Edge::of(e.v, right),
                                  Edge::of(right, e.u)})
      pending.push_back(neighbour);
  }
  return snapshot(points, mesh);
}

bool empty_circumcircle_audit(const Triangulation& t) {
  for (const auto& tri : t.triangles) {
    const auto& a = t.points[tri[0]];
    const auto& b = t.points[tri[1]];
    const auto& c = t.points[tri[2]];
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      const int v = static_cast<int>(i);
      if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
      if (in_circle(a, b, c, t.points[i]) == CirclePosition::kInside) return false;
    }
  }
  return true;
}

FlipOutcome lawson_flips(const Triangulation& t, int count, std::uint64_t seed) {
  Mesh mesh = rebuild(t);
  std::vector<Edge> internal;
  for (const Edge& e : t.edges)
    if (mesh.internal(e)) internal.push_back(e);

  FlipOutcome out;
  if (count <= 0 || internal.empty()) {
    out.triangulation = t;
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, internal.size() - 1);
  const std::int64_t skip_limit = 100 * static_cast<std::int64_t>(t.edges.size());
  std::int64_t skips = 0;
  while (out.performed < count && skips < skip_limit) {
    const std::size_t i = pick(rng);
    if (!mesh.flippable(internal[i])) {
      ++skips;
      continue;
    }
    internal[i] = mesh.flip(internal[i]);
    ++out.performed;
    skips = 0;
  }
  out.triangulation = snapshot(t.points, mesh);
  return out;
}

Triangulation flip_edge(const Triangulation& t, Edge e) {
  e = Edge::of(e.u, e.v);
  Mesh mesh = rebuild(t);
  if (!mesh.flippable(e)) throw std::invalid_argument("flip_edge: edge is not flippable");
  mesh.flip(e);
  return snapshot(t.points, mesh);
}

}  // namespace swapplanarity
