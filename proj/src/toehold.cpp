#include "wri/index.hpp"

#include <algorithm>

#include "wri/error.hpp"

namespace wri {

ToeholdTable::ToeholdTable(std::vector<std::uint64_t> positions, std::vector<IdPair> pairs)
      : positions_(std::move(positions)), pairs_(std::move(pairs)) {
    if (positions_.size() != pairs_.size())
        throw InvariantViolation("toehold positions and pairs differ in length");
    if (!std::is_sorted(positions_.begin(), positions_.end()))
        throw InvariantViolation("toehold positions are not sorted");
}

bool ToeholdTable::is_marked(std::uint64_t pos) const {
    return std::binary_search(positions_.begin(), positions_.end(), pos);
}

std::optional<IdPair> ToeholdTable::lookup(std::uint64_t pos) const {
    auto it = std::lower_bound(positions_.begin(), positions_.end(), pos);
    if (it == positions_.end() || *it != pos)
        return std::nullopt;
    return pairs_[it - positions_.begin()];
}

ToeholdTable build_toehold(const WheelerGraph &g,
                           const PathDecomposition &d,
                           const IdAssignment &ids,
                           const GraphBwt &bwt) {
    const auto out_deg = out_degrees(g);
    const auto endpoint = d.endpoints(g.n);

    std::vector<std::uint64_t> positions;
    std::vector<IdPair> pairs;
    for (std::uint64_t p = 0; p < bwt.size(); ++p) {
        const auto [u, v] = bwt.edge_at[p];
        const bool run_end = p + 1 == bwt.size() || bwt.labels[p + 1] != bwt.labels[p];
        const bool touches_endpoint = endpoint[u] || endpoint[v];
        const bool next_is_sink = u + 1 < g.n && out_deg[u + 1] == 0;
        if (run_end || touches_endpoint || next_is_sink) {
            positions.push_back(p);
            pairs.push_back({ ids.id_of_rank[u], ids.id_of_rank[v] });
        }
    }
    return ToeholdTable(std::move(positions), std::move(pairs));
}

} // namespace wri
