#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "wri/graph.hpp"

// Brute-force reference semantics. Nothing here touches the index
// structures; everything is computed from the edge list directly.
namespace wri::oracle {

inline constexpr VertexId kNoPredecessor = std::numeric_limits<VertexId>::max();

// Rank sets (as membership flags) after each prefix of the pattern; entry 0
// holds every vertex and entry t+1 the vertices entered by a P[t]-edge from
// entry t.
std::vector<std::vector<bool>> naive_trace(const WheelerGraph &g, std::span<const Label> pattern);

// One refinement step of naive_trace.
std::vector<bool> naive_step(const WheelerGraph &g, const std::vector<bool> &from, Label c);

// Ranks of the vertices where a directed path spelling the pattern ends.
std::vector<Rank> naive_match(const WheelerGraph &g, std::span<const Label> pattern);

// table[id of rank k] = id of rank k-1, kNoPredecessor for rank 0.
std::vector<VertexId> naive_phi_table(const WheelerGraph &g, std::span<const VertexId> id_of_rank);

std::uint64_t naive_runs(std::span<const Label> labels);

// True iff the match set is empty or a contiguous range of ranks.
bool check_contiguity(const WheelerGraph &g, std::span<const Label> pattern);
bool is_contiguous(std::span<const Rank> sorted_ranks);

} // namespace wri::oracle
