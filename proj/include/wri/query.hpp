#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wri/index.hpp"

namespace wri {

// Closed, non-empty range of ranks. Empty results are std::nullopt.
struct RankInterval {
    Rank s;
    Rank e;

    std::uint64_t size() const { return e - s + 1; }
    bool operator==(const RankInterval &) const = default;
};

// Closed, non-empty range of B positions.
struct PositionRange {
    std::uint64_t lo;
    std::uint64_t hi;

    bool operator==(const PositionRange &) const = default;
};

struct MatchState {
    RankInterval interval;
    // identifier of the vertex at rank interval.e
    VertexId last_id;

    bool operator==(const MatchState &) const = default;
};

RankInterval full_interval(const WheelerRIndex &ix);

// B positions of the out-edges of the vertices in iv.
std::optional<PositionRange> out_range(const WheelerRIndex &ix, RankInterval iv);

// Vertices reached from iv by an edge labelled c.
std::optional<RankInterval> step_interval(const WheelerRIndex &ix, RankInterval iv, Label c);

// Number of vertices at which some directed path spelling pattern ends.
// The empty pattern matches every vertex.
std::uint64_t count(const WheelerRIndex &ix, std::span<const Label> pattern);

enum class ToeholdCase {
    // the last vertex has an out-edge labelled c
    LastVertexEdge,
    // it does not; the last c-edge of the range comes from an earlier vertex
    EarlierVertexEdge,
};

struct ToeholdStep {
    MatchState state;
    ToeholdCase kind;
    // B position of the edge entering the new last vertex
    std::uint64_t position;
    bool marked;
};

// Extends st by c and tracks the identifier of the new last vertex. Throws
// InvariantViolation if an earlier-vertex step lands on an unmarked position.
std::optional<ToeholdStep> step_toehold_detailed(const WheelerRIndex &ix,
                                                 const MatchState &st,
                                                 Label c);

std::optional<MatchState> step_toehold(const WheelerRIndex &ix, const MatchState &st, Label c);

// Match state for a non-empty pattern; throws std::invalid_argument when
// pattern is empty.
std::optional<MatchState> find_interval(const WheelerRIndex &ix, std::span<const Label> pattern);

// Per-character states of find_interval, stopping at the first empty step.
// Entry 0 comes from the initial lookup, later entries from step_toehold.
std::vector<MatchState> trace(const WheelerRIndex &ix,
                              std::span<const Label> pattern,
                              std::vector<ToeholdStep> *steps = nullptr);

// Identifier of the vertex ranked immediately before the vertex with
// identifier id. Throws FirstInOrderError for the first vertex.
VertexId phi(const WheelerRIndex &ix, VertexId id);

// Identifiers of every matching vertex, last in the order first, then
// following phi.
std::vector<VertexId> locate(const WheelerRIndex &ix, std::span<const Label> pattern);

} // namespace wri
