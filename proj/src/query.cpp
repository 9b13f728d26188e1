#include "wri/query.hpp"

#include <stdexcept>
#include <string>

#include "wri/error.hpp"

namespace wri {

RankInterval full_interval(const WheelerRIndex &ix) {
    return { 0, ix.n - 1 };
}

std::optional<PositionRange> out_range(const WheelerRIndex &ix, RankInterval iv) {
    const std::uint64_t lo = ix.sums.out_prefix[iv.s];
    const std::uint64_t end = ix.sums.out_prefix[iv.e + 1];
    if (lo == end)
        return std::nullopt;
    return PositionRange{ lo, end - 1 };
}

std::optional<RankInterval> step_interval(const WheelerRIndex &ix, RankInterval iv, Label c) {
    if (c >= ix.sigma)
        return std::nullopt;
    auto range = out_range(ix, iv);
    if (!range)
        return std::nullopt;
    const std::uint64_t first = ix.bwt.rank(c, range->lo);
    const std::uint64_t past = ix.bwt.rank(c, range->hi + 1);
    if (past == first)
        return std::nullopt;
    const std::uint64_t base = ix.sums.f_label[c];
    return RankInterval{ ix.sums.vertex_of_in_slot(base + first),
                         ix.sums.vertex_of_in_slot(base + past - 1) };
}

std::uint64_t count(const WheelerRIndex &ix, std::span<const Label> pattern) {
    std::optional<RankInterval> iv = full_interval(ix);
    for (Label c : pattern) {
        iv = step_interval(ix, *iv, c);
        if (!iv)
            return 0;
    }
    return iv->size();
}

std::optional<ToeholdStep> step_toehold_detailed(const WheelerRIndex &ix,
                                                 const MatchState &st,
                                                 Label c) {
    auto next = step_interval(ix, st.interval, c);
    if (!next)
        return std::nullopt;

    // last c-edge leaving the interval; it enters the new last vertex
    const std::uint64_t last_vertex_begin = ix.sums.out_prefix[st.interval.e];
    const std::uint64_t range_end = ix.sums.out_prefix[st.interval.e + 1];
    const std::uint64_t pos = ix.bwt.select(c, ix.bwt.rank(c, range_end) - 1);
    const auto pair = ix.toehold.lookup(pos);

    ToeholdStep step{ { *next, 0 }, ToeholdCase::LastVertexEdge, pos, pair.has_value() };
    if (pos >= last_vertex_begin) {
        // unmarked means both ends are internal to one path: identifiers are consecutive
        step.state.last_id = pair ? pair->dst : st.last_id + 1;
    } else {
        step.kind = ToeholdCase::EarlierVertexEdge;
        if (!pair)
            throw InvariantViolation("toehold: position " + std::to_string(pos)
                                     + " reached from an earlier vertex is not marked");
        step.state.last_id = pair->dst;
    }
    return step;
}

std::optional<MatchState> step_toehold(const WheelerRIndex &ix, const MatchState &st, Label c) {
    auto step = step_toehold_detailed(ix, st, c);
    if (!step)
        return std::nullopt;
    return step->state;
}

namespace {

std::optional<MatchState> initial_state(const WheelerRIndex &ix, Label c) {
    auto iv = step_interval(ix, full_interval(ix), c);
    if (!iv)
        return std::nullopt;
    // the last c in B always ends a run, so it is marked
    const auto pair = ix.toehold.lookup(ix.bwt.select(c, ix.bwt.count(c) - 1));
    if (!pair)
        throw InvariantViolation("toehold: last occurrence of a label is not marked");
    return MatchState{ *iv, pair->dst };
}

} // namespace

std::optional<MatchState> find_interval(const WheelerRIndex &ix, std::span<const Label> pattern) {
    if (pattern.empty())
        throw std::invalid_argument("find_interval requires a non-empty pattern");
    auto st = initial_state(ix, pattern.front());
    for (std::size_t i = 1; st && i < pattern.size(); ++i) {
        st = step_toehold(ix, *st, pattern[i]);
    }
    return st;
}

std::vector<MatchState> trace(const WheelerRIndex &ix,
                              std::span<const Label> pattern,
                              std::vector<ToeholdStep> *steps) {
    std::vector<MatchState> states;
    if (pattern.empty())
        return states;
    auto st = initial_state(ix, pattern.front());
    if (!st)
        return states;
    states.push_back(*st);
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        auto step = step_toehold_detailed(ix, states.back(), pattern[i]);
        if (!step)
            break;
        states.push_back(step->state);
        if (steps)
            steps->push_back(*step);
    }
    return states;
}

VertexId phi(const WheelerRIndex &ix, VertexId id) {
    if (id >= ix.n)
        throw std::out_of_range("identifier " + std::to_string(id) + " out of range");
    const auto j = ix.phi.successor(id);
    if (!j)
        throw InvariantViolation("phi: identifier " + std::to_string(id) + " has no sampled successor");
    const VertexId sampled = ix.phi.sampled()[*j];
    const VertexId satellite = ix.phi.satellite()[*j];
    if (sampled == id) {
        if (satellite == PhiStructure::kNone)
            throw FirstInOrderError("phi: identifier " + std::to_string(id) + " is first in the order");
        return satellite;
    }
    const VertexId offset = sampled - id;
    if (satellite == PhiStructure::kNone || satellite < offset)
        throw InvariantViolation("phi: inconsistent satellite for identifier " + std::to_string(id));
    return satellite - offset;
}

std::vector<VertexId> locate(const WheelerRIndex &ix, std::span<const Label> pattern) {
    std::uint64_t k = ix.n;
    VertexId id = ix.last_id;
    if (!pattern.empty()) {
        auto st = find_interval(ix, pattern);
        if (!st)
            return {};
        k = st->interval.size();
        id = st->last_id;
    }
    std::vector<VertexId> ids;
    ids.reserve(k);
    ids.push_back(id);
    while (ids.size() < k) {
        ids.push_back(phi(ix, ids.back()));
    }
    return ids;
}

} // namespace wri
