#include "swapplanarity/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "swapplanarity/solve.hpp"

namespace swapplanarity {
namespace {

bool has_collinear_triple(std::span<const GridPoint> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (orient(p[i], p[j], p[k]) == Orientation::kCollinear) return true;
  return false;
}

// Points other than `anchor`, in counter-clockwise angular order around it.
// Valid when `anchor` is a strict hull vertex and no three points are collinear.
std::vector<int> radial_order(std::span<const GridPoint> p, int anchor) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (i != anchor) out.push_back(i);
  std::sort(out.begin(), out.end(), [&](int q, int r) {
    return orient(p[anchor], p[q], p[r]) == Orientation::kLeft;
  });
  return out;
}

void backtrack_matchings(std::span<const GridPoint> p1, std::span<const GridPoint> p2,
                         std::vector<int>& mu, std::vector<char>& used,
                         std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(std::count_if(mu.begin(), mu.end(), [](int v) { return v >= 0; }));
  const int n = static_cast<int>(p1.size());
  if (k == n) {
    out.push_back(mu);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        ok = orient(p1[i], p1[j], p1[k]) == orient(p2[mu[i]], p2[mu[j]], p2[cand]);
    if (!ok) continue;
    mu[k] = cand;
    used[cand] = 1;
    backtrack_matchings(p1, p2, mu, used, out);
    used[cand] = 0;
    mu[k] = -1;
  }
}

std::vector<std::vector<int>> adjacency_matrix(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& e : edges) m[e.u][e.v] = m[e.v][e.u] = 1;
  return m;
}

// Vertex matching induced by a point matching: mu(v) = sb^-1(pi(sa(v))).
Assignment vertex_matching(const PuzzleInstance& a, const PuzzleInstance& b,
                           std::span<const int> point_matching) {
  const int n = a.vertex_count();
  Assignment at_point(n);
  for (int v = 0; v < n; ++v) at_point[b.assignment[v]] = v;
  Assignment mu(n);
  for (int v = 0; v < n; ++v) mu[v] = at_point[point_matching[a.assignment[v]]];
  return mu;
}

std::optional<Edge> first_missing_edge(const PuzzleInstance& a, const PuzzleInstance& b,
                                       std::span<const int> mu) {
  const EdgeIndex in_b(b.vertex_count(), b.edges);
  for (const auto& e : a.edges)
    if (!in_b.contains(mu[e.u], mu[e.v])) return e;
  return std::nullopt;
}

// Bounded backtracking search for any graph isomorphism a -> b, identity first.
std::optional<Assignment> find_isomorphism(const PuzzleInstance& a, const PuzzleInstance& b,
                                           std::uint64_t budget) {
  const int n = a.vertex_count();
  Assignment identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (!first_missing_edge(a, b, identity)) return identity;

  const auto adj_a = adjacency_matrix(n, a.edges);
  const auto adj_b = adjacency_matrix(n, b.edges);
  const auto deg_a = degrees(n, a.edges);
  const auto deg_b = degrees(n, b.edges);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg_a[x] > deg_a[y]; });

  Assignment mu(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t steps = 0;
  auto search = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    if (++steps > budget) return false;
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg_b[w] != deg_a[v]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = adj_a[v][order[i]] == adj_b[w][mu[order[i]]];
      if (!ok) continue;
      mu[v] = w;
      used[w] = 1;
      if (self(self, k + 1)) return true;
      used[w] = 0;
      mu[v] = -1;
    }
    return false;
  };
  if (search(search, 0)) return mu;
  return std::nullopt;
}

std::optional<std::array<int, 3>> first_violated_triple(const PuzzleInstance& a,
                                                        const PuzzleInstance& b,
                                                        std::span<const int> mu) {
  const int n = a.vertex_count();
  auto pa = [&](int v) { return a.points[a.assignment[v]]; };
  auto pb = [&](int v) { return b.points[b.assignment[mu[v]]]; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(pa(i), pa(j), pa(k)) != orient(pb(i), pb(j), pb(k)))
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_refuting_quadruple(const PuzzleInstance& a,
                                                          const PuzzleInstance& b,
                                                          std::span<const int> mu) {
  const int n = a.vertex_count();
  auto pa = [&](int v) { return a.points[a.assignment[v]]; };
  auto pb = [&](int v) { return b.points[b.assignment[mu[v]]]; };
  auto differs = [&](int w, int x, int y, int z) {
    return segments_cross(pa(w), pa(x), pa(y), pa(z)) != segments_cross(pb(w), pb(x), pb(y), pb(z));
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (differs(i, j, k, l)) return std::array<int, 4>{i, j, k, l};
          if (differs(i, k, j, l)) return std::array<int, 4>{i, k, j, l};
          if (differs(i, l, j, k)) return std::array<int, 4>{i, l, j, k};
        }
  return std::nullopt;
}

std::vector<int> edge_map(const PuzzleInstance& a, const PuzzleInstance& b,
                          std::span<const int> mu) {
  if (static_cast<int>(mu.size()) != a.vertex_count() || a.vertex_count() != b.vertex_count() ||
      a.edges.size() != b.edges.size())
    throw std::invalid_argument("matching does not fit the two instances");
  const EdgeIndex in_b(b.vertex_count(), b.edges);
  std::vector<int> out;
  for (const auto& e : a.edges) {
    const int image = in_b.find(mu[e.u], mu[e.v]);
    if (image < 0) throw std::invalid_argument("matching does not preserve the edge relation");
    out.push_back(image);
  }
  return out;
}

// Matched crossing relation check between the two current drawings.
bool crossings_agree(const PuzzleInstance& a, const Assignment& sa, const CrossingTable& ta,
                     const PuzzleInstance& b, const Assignment& sb, const CrossingTable& tb,
                     std::span<const int> emap) {
  const auto& ea = a.edges;
  const auto& eb = b.edges;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const Edge& fi = eb[emap[i]];
    for (std::size_t j = i + 1; j < ea.size(); ++j) {
      const Edge& fj = eb[emap[j]];
      const bool ca = ta.cross(sa[ea[i].u], sa[ea[i].v], sa[ea[j].u], sa[ea[j].v]);
      const bool cb = tb.cross(sb[fi.u], sb[fi.v], sb[fj.u], sb[fj.v]);
      if (ca != cb) return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kEquivalent:
      return "EQUIVALENT";
    case Verdict::kNotEquivalent:
      return "NOT_EQUIVALENT";
    case Verdict::kInapplicable:
      return "INAPPLICABLE";
  }
  return "UNKNOWN";
}

bool preserves_orientation(std::span<const GridPoint> p1, std::span<const GridPoint> p2,
                           std::span<const int> mu) {
  const std::size_t n = p1.size();
  if (p2.size() != n || mu.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(p1[i], p1[j], p1[k]) != orient(p2[mu[i]], p2[mu[j]], p2[mu[k]])) return false;
  return true;
}

std::vector<std::vector<int>> same_order_type(std::span<const GridPoint> p1,
                                              std::span<const GridPoint> p2) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(p1.size());
  if (p2.size() != p1.size()) return out;

  if (n < 3 || has_collinear_triple(p1) || has_collinear_triple(p2)) {
    std::vector<int> mu(n, -1);
    std::vector<char> used(n, 0);
    backtrack_matchings(p1, p2, mu, used, out);
    return out;
  }

  const auto hull1 = convex_hull(p1);
  const auto hull2 = convex_hull(p2);
  if (hull1.size() != hull2.size()) return out;
  const int anchor = static_cast<int>(hull1[0]);
  const auto around1 = radial_order(p1, anchor);

  for (const auto image : hull2) {
    const auto around2 = radial_order(p2, static_cast<int>(image));
    std::vector<int> mu(n);
    mu[anchor] = static_cast<int>(image);
    for (std::size_t i = 0; i < around1.size(); ++i) mu[around1[i]] = around2[i];
    if (preserves_orientation(p1, p2, mu)) out.push_back(std::move(mu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EquivalenceCertificate swap_equivalent(const PuzzleInstance& a, const PuzzleInstance& b) {
  EquivalenceCertificate cert;
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.points.size() != b.points.size() ||
      a.edges.size() != b.edges.size()) {
    std::ostringstream os;
    os << "size mismatch: " << n << " vertices / " << a.edges.size() << " edges vs "
       << b.vertex_count() << " vertices / " << b.edges.size() << " edges";
    cert.reason = os.str();
    return cert;
  }

  cert.a_connected_non_star = is_connected(n, a.edges) && !is_star(a.edges);
  cert.b_connected_non_star = is_connected(n, b.edges) && !is_star(b.edges);

  const auto point_matchings = same_order_type(a.points, b.points);
  cert.same_order_type = !point_matchings.empty();
  std::optional<Assignment> first_candidate;
  for (const auto& pi : point_matchings) {
    Assignment mu = vertex_matching(a, b, pi);
    if (!first_missing_edge(a, b, mu)) {
      cert.order_type_isomorphism = true;
      cert.matching = std::move(mu);
      break;
    }
    if (!first_candidate) first_candidate = std::move(mu);
  }

  if (!cert.a_connected_non_star || !cert.b_connected_non_star) {
    cert.verdict = Verdict::kInapplicable;
    std::ostringstream os;
    os << "characterization needs connected non-star graphs ("
       << (cert.a_connected_non_star ? "a ok" : "a fails") << ", "
       << (cert.b_connected_non_star ? "b ok" : "b fails") << "); order-type isomorphism "
       << (cert.order_type_isomorphism ? "exists" : "does not exist");
    cert.reason = os.str();
    return cert;
  }

  if (cert.order_type_isomorphism) {
    cert.verdict = Verdict::kEquivalent;
    cert.reason = "order-type preserving matching is a graph isomorphism";
    return cert;
  }

  cert.verdict = Verdict::kNotEquivalent;
  if (first_candidate) {
    // Same order type, but no orientation-preserving matching keeps the edges.
    cert.matching = first_candidate;
    cert.missing_edge = first_missing_edge(a, b, *first_candidate);
    std::ostringstream os;
    os << "no order-type preserving matching is a graph isomorphism; under the first one, edge ("
       << cert.missing_edge->u << ", " << cert.missing_edge->v << ") has no image";
    cert.reason = os.str();
    return cert;
  }

  auto iso = find_isomorphism(a, b, 2'000'000);
  if (!iso) {
    cert.reason = cert.same_order_type ? "graphs are not isomorphic"
                                       : "point sets differ in order type and no graph "
                                         "isomorphism was found";
    return cert;
  }
  cert.matching = iso;
  cert.violated_triple = first_violated_triple(a, b, *iso);
  cert.refuting_quadruple = find_refuting_quadruple(a, b, *iso);
  std::ostringstream os;
  os << "point sets differ in order type under every graph isomorphism";
  if (cert.violated_triple) {
    const auto& t = *cert.violated_triple;
    os << "; under the reported one, triple (" << t[0] << ", " << t[1] << ", " << t[2]
       << ") changes orientation";
  }
  if (cert.refuting_quadruple) {
    const auto& q = *cert.refuting_quadruple;
    os << "; segments (" << q[0] << ", " << q[1] << ") and (" << q[2] << ", " << q[3]
       << ") cross in only one drawing";
  }
  cert.reason = os.str();
  return cert;
}

bool matched_walk_agrees(const PuzzleInstance& a, const PuzzleInstance& b,
                         std::span<const int> mu, std::span<const SwapMove> moves) {
  const auto emap = edge_map(a, b, mu);
  const CrossingTable ta(a.points), tb(b.points);
  Assignment sa = a.assignment, sb = b.assignment;
  if (!crossings_agree(a, sa, ta, b, sb, tb, emap)) return false;
  for (const auto move : moves) {
    if (move.edge >= a.edges.size()) throw std::out_of_range("matched_walk_agrees: bad edge");
    swap_endpoints(sa, a.edges[move.edge]);
    swap_endpoints(sb, b.edges[emap[move.edge]]);
    if (!crossings_agree(a, sa, ta, b, sb, tb, emap)) return false;
  }
  return true;
}

bool definition_oracle(const PuzzleInstance& a, const PuzzleInstance& b, std::span<const int> mu,
                       int walk_length, int trials, std::uint64_t seed) {
  const auto emap = edge_map(a, b, mu);
  const CrossingTable ta(a.points), tb(b.points);
  if (!crossings_agree(a, a.assignment, ta, b, b.assignment, tb, emap)) return false;
  if (a.edges.empty()) return true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.edges.size() - 1);
  for (int t = 0; t < trials; ++t) {
    Assignment sa = a.assignment, sb = b.assignment;
    for (int step = 0; step < walk_length; ++step) {
      const std::size_t e = pick(rng);
      swap_endpoints(sa, a.edges[e]);
      swap_endpoints(sb, b.edges[emap[e]]);
      if (!crossings_agree(a, sa, ta, b, sb, tb, emap)) return false;
    }
  }
  return true;
}

MoveSequence separating_walk(const PuzzleInstance& a, const std::array<int, 4>& quadruple) {
  const int n = a.vertex_count();
  if (!is_connected(n, a.edges) || is_star(a.edges))
    throw std::invalid_argument("separating_walk: graph must be connected and not a star");

  std::optional<std::pair<Edge, Edge>> pair;
  for (std::size_t i = 0; i < a.edges.size() && !pair; ++i)
    for (std::size_t j = i + 1; j < a.edges.size() && !pair; ++j) {
      const Edge& e = a.edges[i];
      const Edge& f = a.edges[j];
      if (!e.touches(f.u) && !e.touches(f.v)) pair = std::make_pair(e, f);
    }
  if (!pair) throw std::logic_error("separating_walk: no endpoint-disjoint edge pair");

  const std::array<int, 4> movers{pair->first.u, pair->first.v, pair->second.u, pair->second.v};
  Assignment target = a.assignment;
  for (int i = 0; i < 4; ++i) {
    const int point = a.assignment[quadruple[i]];
    const int holder = static_cast<int>(std::find(target.begin(), target.end(), point) -
                                        target.begin());
    std::swap(target[holder], target[movers[i]]);
  }
  return route_to_assignment(a, target).moves;
}

}  // namespace swapplanarity
