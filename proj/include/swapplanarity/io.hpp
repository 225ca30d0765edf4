#pragma once

// Text formats: the canonical instance JSON, JSON renderings of solver and
// equivalence results, and the predicate test vectors shared with the client.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "swapplanarity/equiv.hpp"
#include "swapplanarity/puzzle.hpp"
#include "swapplanarity/solve.hpp"

namespace swapplanarity {

inline constexpr int kFormatVersion = 1;

/// Canonical, byte-stable serialization: fixed field order, edges sorted with
/// u < v, one top-level field per line, trailing newline.
std::string to_json(const PuzzleInstance& inst);

/// Parses instance text without checking instance invariants. Edge endpoints
/// are normalized to u < v and the edge list sorted. Throws InstanceFormatError
/// for malformed JSON (with the byte offset) or a wrong shape.
PuzzleInstance parse_instance(std::string_view text);

/// parse_instance followed by validate(); throws InvalidInstance listing every
/// violation.
PuzzleInstance load_instance(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// {"min_swaps": int|null, "searched_depth", "solution_count",
/// "nodes_expanded", "states_visited", "independent_pairs", "solutions"?}.
/// Sequences are lists of edge indices and only included when requested.
std::string to_json(const SolveReport& report, bool include_sequences);

std::string to_json(const EquivalenceCertificate& cert);

/// Randomized orient / segments_cross cases with their expected results. Half
/// use the full grid, half a tiny grid so collinear and touching cases occur.
std::string predicate_test_vectors(std::size_t count, std::uint64_t seed);

}  // namespace swapplanarity
