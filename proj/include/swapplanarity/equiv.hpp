#pragma once

// Swap-equivalence of two instances.
//
// Two drawings are swap-equivalent when a vertex matching preserves the edge
// relation and, after any sequence of matched swaps, matched edge pairs cross
// in one drawing exactly when they cross in the other. For connected graphs
// that are not stars this reduces to: one matching of the point sets that
// preserves every triple orientation and is simultaneously a graph
// isomorphism. That reduction is what swap_equivalent() decides; the
// randomized definition_oracle() checks the original definition directly.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapplanarity/geom.hpp"
#include "swapplanarity/puzzle.hpp"

namespace swapplanarity {

enum class Verdict { kEquivalent, kNotEquivalent, kInapplicable };

const char* to_string(Verdict v) noexcept;

struct EquivalenceCertificate {
  Verdict verdict = Verdict::kNotEquivalent;
  // Vertex of `a` -> vertex of `b`. The witness for kEquivalent; for other
  // verdicts, the matching the refutation below refers to, if any.
  std::optional<Assignment> matching;
  std::string reason;

  // Vertices of `a` whose points change orientation under `matching`.
  std::optional<std::array<int, 3>> violated_triple;
  // Vertices (w, x, y, z) of `a`: segment wx vs yz crosses in one drawing and
  // not in the other under `matching`.
  std::optional<std::array<int, 4>> refuting_quadruple;
  // Edge of `a` whose image under `matching` is not an edge of `b`.
  std::optional<Edge> missing_edge;

  // Necessary-condition summary, filled for every verdict.
  bool same_order_type = false;
  bool order_type_isomorphism = false;
  bool a_connected_non_star = false;
  bool b_connected_non_star = false;
};

/// Every bijection mu (point index of p1 -> point index of p2) with
/// orient(u, v, w) == orient(mu u, mu v, mu w) for all triples, sorted
/// lexicographically. Without collinear triples the candidates come from
/// anchoring the lowest hull vertex and its hull successor, at most one per
/// hull vertex of p2; with collinear triples an exact backtracking search is
/// used instead.
std::vector<std::vector<int>> same_order_type(std::span<const GridPoint> p1,
                                              std::span<const GridPoint> p2);

/// True iff mu preserves all triple orientations between p1 and p2.
bool preserves_orientation(std::span<const GridPoint> p1, std::span<const GridPoint> p2,
                           std::span<const int> mu);

EquivalenceCertificate swap_equivalent(const PuzzleInstance& a, const PuzzleInstance& b);

/// Randomized falsification of the definition: `trials` walks of
/// `walk_length` uniformly random swaps, applied to `a` and mirrored through
/// `mu` onto `b`, comparing the full set of crossing edge pairs before the
/// first and after every step. Returns false on the first discrepancy.
/// Throws std::invalid_argument if mu does not carry the edges of a onto the
/// edges of b.
bool definition_oracle(const PuzzleInstance& a, const PuzzleInstance& b, std::span<const int> mu,
                       int walk_length, int trials, std::uint64_t seed);

/// Replays `moves` (edge indices of `a`) on both instances through `mu` and
/// reports whether the crossing pairs agreed at every step.
bool matched_walk_agrees(const PuzzleInstance& a, const PuzzleInstance& b,
                         std::span<const int> mu, std::span<const SwapMove> moves);

/// Swap sequence on a connected, non-star `a` that puts two endpoint-disjoint
/// edges on the point pairs of `quadruple` (w, x) and (y, z), so the crossing
/// status of those two segments becomes visible as an edge pair.
MoveSequence separating_walk(const PuzzleInstance& a, const std::array<int, 4>& quadruple);

}  // namespace swapplanarity
