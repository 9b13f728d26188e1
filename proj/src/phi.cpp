#include "wri/index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wri/error.hpp"

namespace wri {

PhiStructure::PhiStructure(std::vector<VertexId> sampled, std::vector<VertexId> satellite)
      : sampled_(std::move(sampled)), satellite_(std::move(satellite)) {
    if (sampled_.size() != satellite_.size())
        throw InvariantViolation("phi samples and satellites differ in length");
    if (std::adjacent_find(sampled_.begin(), sampled_.end(), std::greater_equal<>()) != sampled_.end())
        throw InvariantViolation("phi samples are not strictly increasing");
}

bool PhiStructure::contains(VertexId id) const {
    return std::binary_search(sampled_.begin(), sampled_.end(), id);
}

std::optional<std::size_t> PhiStructure::successor(VertexId id) const {
    auto it = std::lower_bound(sampled_.begin(), sampled_.end(), id);
    if (it == sampled_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - sampled_.begin());
}

PhiStructure build_phi(const WheelerGraph &g,
                       const PathDecomposition &d,
                       const IdAssignment &ids,
                       const GraphBwt &bwt) {
    const auto in_deg = in_degrees(g);
    const auto out_deg = out_degrees(g);
    const auto endpoint = d.endpoints(g.n);

    std::vector<std::uint64_t> first_out(g.n + 1, 0);
    for (const Edge &e : g.edges) {
        ++first_out[e.src + 1];
    }
    std::partial_sum(first_out.begin(), first_out.end(), first_out.begin());

    // A vertex u whose single out-edge (u,v) has in(v) = 1 and where neither
    // u nor v ends a path: the edge that an unsampled identifier follows.
    auto chained = [&](Rank u) {
        if (out_deg[u] != 1 || endpoint[u])
            return false;
        const Rank v = bwt.edge_at[first_out[u]].second;
        return in_deg[v] == 1 && !endpoint[v];
    };

    std::vector<std::pair<VertexId, VertexId>> samples;
    for (Rank u = 0; u < g.n; ++u) {
        if (u == 0) {
            samples.emplace_back(ids.id_of_rank[u], PhiStructure::kNone);
            continue;
        }
        const Rank prev = u - 1;
        const bool sampled = !chained(u) || !chained(prev)
                || bwt.labels[first_out[u]] != bwt.labels[first_out[prev]];
        if (sampled)
            samples.emplace_back(ids.id_of_rank[u], ids.id_of_rank[prev]);
    }
    std::sort(samples.begin(), samples.end());

    std::vector<VertexId> sampled;
    std::vector<VertexId> satellite;
    sampled.reserve(samples.size());
    satellite.reserve(samples.size());
    for (auto [id, sat] : samples) {
        sampled.push_back(id);
        satellite.push_back(sat);
    }
    return PhiStructure(std::move(sampled), std::move(satellite));
}

} // namespace wri
