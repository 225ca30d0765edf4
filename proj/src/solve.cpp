#include "swapplanarity/solve.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "swapplanarity/errors.hpp"

namespace swapplanarity {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Assignments packed one byte per vertex. Strings live in a deque so the
// string_view keys stay valid as the store grows.
class StateStore {
 public:
  static constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t find(std::string_view key) const {
    const auto it = index_.find(key);
    return it == index_.end() ? kMissing : it->second;
  }

  std::uint32_t insert(const std::string& key, int depth, int last_edge, bool goal) {
    const auto id = static_cast<std::uint32_t>(states_.size());
    states_.push_back(key);
    index_.emplace(states_.back(), id);
    depth_.push_back(depth);
    last_edge_.push_back(last_edge);
    goal_.push_back(goal);
    return id;
  }

  const std::string& state(std::uint32_t id) const { return states_[id]; }
  int depth(std::uint32_t id) const { return depth_[id]; }
  int last_edge(std::uint32_t id) const { return last_edge_[id]; }
  bool goal(std::uint32_t id) const { return goal_[id] != 0; }
  std::size_t size() const { return states_.size(); }

 private:
  std::deque<std::string> states_;
  std::unordered_map<std::string_view, std::uint32_t> index_;
  std::vector<int> depth_;
  std::vector<int> last_edge_;
  std::vector<char> goal_;
};

class Search {
 public:
  Search(const PuzzleInstance& inst, const SolveOptions& options)
      : inst_(inst), options_(options), table_(inst.points) {}

  SolveReport run() {
    SolveReport report;
    report.searched_depth = options_.max_depth;

    const std::string start(inst_.assignment.begin(), inst_.assignment.end());
    store_.insert(start, 0, -1, is_goal(start));
    report.states_visited = 1;
    if (store_.goal(0)) {
      report.min_swaps = 0;
      report.searched_depth = 0;
      report.solution_count = 1;
      report.solutions.emplace_back();
      return report;
    }

    std::vector<std::uint32_t> frontier{0};
    for (int depth = 0; depth < options_.max_depth && !frontier.empty(); ++depth) {
      std::vector<std::uint32_t> next;
      bool reached = false;
      for (const auto id : frontier) {
        ++report.nodes_expanded;
        std::string state = store_.state(id);
        const int skip = store_.last_edge(id);
        for (std::size_t e = 0; e < inst_.edges.size(); ++e) {
          if (static_cast<int>(e) == skip) continue;
          swap_in(state, e);
          if (store_.find(state) == StateStore::kMissing) {
            const bool goal = is_goal(state);
            next.push_back(store_.insert(state, depth + 1, static_cast<int>(e), goal));
            reached = reached || goal;
            if (store_.size() > options_.max_states)
              throw SearchLimitExceeded("min_swaps: state limit of " +
                                        std::to_string(options_.max_states) + " exceeded");
          }
          swap_in(state, e);
        }
      }
      report.states_visited = store_.size();
      if (reached) {
        report.min_swaps = depth + 1;
        report.searched_depth = depth + 1;
        break;
      }
      frontier = std::move(next);
    }
    if (!report.found()) return report;

    target_depth_ = *report.min_swaps;
    ways_.assign(store_.size(), kUnknown);
    report.solution_count = ways(0);
    MoveSequence prefix;
    collect(0, prefix, report.solutions);
    const auto& first = report.solutions.front();
    for (std::size_t i = 0; i < first.size(); ++i)
      for (std::size_t j = i + 1; j < first.size(); ++j)
        if (independent(inst_, first[i], first[j])) report.independent_pairs.emplace_back(i, j);
    return report;
  }

 private:
  static constexpr std::uint64_t kUnknown = kSaturated - 1;

  void swap_in(std::string& state, std::size_t e) const {
    std::swap(state[inst_.edges[e].u], state[inst_.edges[e].v]);
  }

  bool is_goal(const std::string& state) const {
    auto at = [&state](int v) { return static_cast<int>(static_cast<unsigned char>(state[v])); };
    const auto& edges = inst_.edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int a = at(edges[i].u), b = at(edges[i].v);
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (table_.cross(a, b, at(edges[j].u), at(edges[j].v))) return false;
    }
    return true;
  }

  // Child of `id` via edge e if it lies one layer deeper, else kMissing.
  std::uint32_t layered_child(std::uint32_t id, std::size_t e) const {
    std::string state = store_.state(id);
    swap_in(state, e);
    const auto child = store_.find(state);
    if (child == StateStore::kMissing || store_.depth(child) != store_.depth(id) + 1)
      return StateStore::kMissing;
    return child;
  }

  // Number of minimal sequences from `id` to a plane state at target depth.
  std::uint64_t ways(std::uint32_t id) {
    if (ways_[id] != kUnknown) return ways_[id];
    std::uint64_t total = 0;
    if (store_.depth(id) == target_depth_) {
      total = store_.goal(id) ? 1 : 0;
    } else {
      for (std::size_t e = 0; e < inst_.edges.size(); ++e) {
        const auto child = layered_child(id, e);
        if (child != StateStore::kMissing) total = saturating_add(total, ways(child));
      }
    }
    return ways_[id] = total;
  }

  void collect(std::uint32_t id, MoveSequence& prefix, std::vector<MoveSequence>& out) {
    if (out.size() >= options_.solution_cap) return;
    if (store_.depth(id) == target_depth_) {
      if (store_.goal(id)) out.push_back(prefix);
      return;
    }
    for (std::size_t e = 0; e < inst_.edges.size() && out.size() < options_.solution_cap; ++e) {
      const auto child = layered_child(id, e);
      if (child == StateStore::kMissing || ways(child) == 0) continue;
      prefix.push_back(SwapMove{e});
      collect(child, prefix, out);
      prefix.pop_back();
    }
  }

  const PuzzleInstance& inst_;
  const SolveOptions& options_;
  CrossingTable table_;
  StateStore store_;
  int target_depth_ = 0;
  std::vector<std::uint64_t> ways_;
};

}  // namespace

SolveReport min_swaps(const PuzzleInstance& inst, const SolveOptions& options) {
  if (options.max_depth < 0) throw std::invalid_argument("min_swaps: max_depth must be >= 0");
  if (inst.points.size() > 255)
    throw std::invalid_argument("min_swaps: at most 255 points supported");
  if (inst.assignment.size() != inst.points.size())
    throw std::invalid_argument("min_swaps: assignment size differs from the point count");
  for (const int p : inst.assignment)
    if (p < 0 || static_cast<std::size_t>(p) >= inst.points.size())
      throw std::invalid_argument("min_swaps: assignment entry out of range");
  for (const auto& e : inst.edges)
    if (e.u < 0 || e.v < 0 || e.u >= inst.vertex_count() || e.v >= inst.vertex_count())
      throw std::invalid_argument("min_swaps: edge references a missing vertex");
  return Search(inst, options).run();
}

std::uint64_t enumeration_size(std::uint64_t m_edges, int depth) {
  if (m_edges < 1 || depth < 1)
    throw std::invalid_argument("enumeration_size: need m >= 1 and depth >= 1");
  std::uint64_t total = m_edges;
  for (int i = 1; i < depth; ++i) {
    if (m_edges - 1 != 0 && total > kSaturated / (m_edges - 1))
      throw std::overflow_error("enumeration_size: result exceeds 64 bits");
    total *= m_edges - 1;
  }
  return total;
}

bool independent(const PuzzleInstance& inst, SwapMove a, SwapMove b) {
  if (a.edge >= inst.edges.size() || b.edge >= inst.edges.size())
    throw std::out_of_range("independent: edge index out of range");
  const Edge& x = inst.edges[a.edge];
  const Edge& y = inst.edges[b.edge];
  if (x.touches(y.u) || x.touches(y.v)) return false;
  for (const Edge& e : inst.edges) {
    if (e == x || e == y) continue;
    const bool u_in = x.touches(e.u) || y.touches(e.u);
    const bool v_in = x.touches(e.v) || y.touches(e.v);
    if (u_in && v_in) return false;
  }
  return true;
}

RoutePlan route_to_assignment(const PuzzleInstance& inst, std::span<const int> target) {
  const int n = inst.vertex_count();
  if (static_cast<int>(target.size()) != n)
    throw UnreachableTarget("route_to_assignment: target has the wrong size");
  {
    std::vector<char> seen(n, 0);
    for (const int p : target) {
      if (p < 0 || p >= n || seen[p])
        throw UnreachableTarget("route_to_assignment: target is not a permutation");
      seen[p] = 1;
    }
  }

  const auto component = component_ids(n, inst.edges);
  {
    // Each component must keep the set of points it currently occupies.
    std::vector<int> point_owner(n, -1);
    for (int v = 0; v < n; ++v) point_owner[inst.assignment[v]] = component[v];
    for (int v = 0; v < n; ++v)
      if (point_owner[target[v]] != component[v])
        throw UnreachableTarget("route_to_assignment: target moves a point between components");
  }

  const auto adj = adjacency_lists(n, inst.edges);
  const EdgeIndex edge_index(n, inst.edges);
  Assignment where = inst.assignment;
  std::vector<int> occupant(n);
  for (int v = 0; v < n; ++v) occupant[where[v]] = v;

  RoutePlan plan;
  std::vector<int> parent(n, -1), depth(n, 0);
  std::vector<char> visited(n, 0);
  for (int root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<int> order{root};
    visited[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int u = order[head];
      for (const int w : adj[u]) {
        if (visited[w]) continue;
        visited[w] = 1;
        parent[w] = u;
        depth[w] = depth[u] + 1;
        order.push_back(w);
      }
    }

    // Reverse BFS order always retires a leaf of the remaining subtree.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int goal = *it;
      const int from = occupant[target[goal]];
      std::vector<int> up, down;  // from -> lca, goal -> lca (exclusive)
      int a = from, b = goal;
      while (depth[a] > depth[b]) up.push_back(std::exchange(a, parent[a]));
      while (depth[b] > depth[a]) down.push_back(std::exchange(b, parent[b]));
      while (a != b) {
        up.push_back(std::exchange(a, parent[a]));
        down.push_back(std::exchange(b, parent[b]));
      }
      std::vector<int> path = std::move(up);
      path.push_back(a);
      path.insert(path.end(), down.rbegin(), down.rend());

      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int x = path[i], y = path[i + 1];
        plan.moves.push_back(SwapMove{static_cast<std::size_t>(edge_index.find(x, y))});
        std::swap(where[x], where[y]);
        occupant[where[x]] = x;
        occupant[where[y]] = y;
      }
      plan.phase_lengths.push_back(path.size() - 1);
    }
  }
  return plan;
}

SolvabilityResult exhaustive_solvable(const PuzzleInstance& inst, std::uint64_t guard) {
  const int n = inst.vertex_count();
  const auto component = component_ids(n, inst.edges);
  const int components =
      n == 0 ? 0 : *std::max_element(component.begin(), component.end()) + 1;

  std::vector<std::vector<int>> members(components), slots(components);
  for (int v = 0; v < n; ++v) {
    members[component[v]].push_back(v);
    slots[component[v]].push_back(inst.assignment[v]);
  }
  std::uint64_t space = 1;
  for (const auto& group : members)
    for (std::uint64_t k = 2; k <= group.size(); ++k) {
      if (space > guard / k) throw EnumerationTooLarge("exhaustive_solvable: search space too large");
      space *= k;
    }

  std::vector<int> order;
  for (const auto& group : members) order.insert(order.end(), group.begin(), group.end());
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  // Edges become checkable once their later endpoint (in `order`) is placed.
  std::vector<std::vector<std::size_t>> closes(n);
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    closes[std::max(rank[e.u], rank[e.v])].push_back(i);
  }

  SolvabilityResult result;
  Assignment current(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> placed;
  const auto& pts = inst.points;

  auto segment_ok = [&](std::size_t i) {
    const auto& e = inst.edges[i];
    for (const auto j : placed) {
      const auto& f = inst.edges[j];
      if (segments_cross(pts[current[e.u]], pts[current[e.v]], pts[current[f.u]],
                         pts[current[f.v]]))
        return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int index) -> bool {
    if (index == n) return true;
    const int v = order[index];
    for (const int p : slots[component[v]]) {
      if (used[p]) continue;
      used[p] = 1;
      current[v] = p;
      ++result.placements_tried;
      const std::size_t mark = placed.size();
      bool ok = true;
      for (const auto i : closes[index]) {
        if (!segment_ok(i)) {
          ok = false;
          break;
        }
        placed.push_back(i);
      }
      if (ok && self(self, index + 1)) return true;
      placed.resize(mark);
      used[p] = 0;
      current[v] = -1;
    }
    return false;
  };

  if (search(search, 0)) {
    result.solvable = true;
    result.witness = current;
  }
  return result;
}

}  // namespace swapplanarity
