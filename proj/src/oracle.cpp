#include "wri/oracle.hpp"

namespace wri::oracle {

std::vector<bool> naive_step(const WheelerGraph &g, const std::vector<bool> &from, Label c) {
    std::vector<bool> to(g.n, false);
    for (const Edge &e : g.edges) {
        if (e.label == c && from[e.src])
            to[e.dst] = true;
    }
    return to;
}

std::vector<std::vector<bool>> naive_trace(const WheelerGraph &g, std::span<const Label> pattern) {
    std::vector<std::vector<bool>> sets;
    sets.reserve(pattern.size() + 1);
    sets.emplace_back(g.n, true);
    for (Label c : pattern) {
        sets.push_back(naive_step(g, sets.back(), c));
    }
    return sets;
}

std::vector<Rank> naive_match(const WheelerGraph &g, std::span<const Label> pattern) {
    const auto last = naive_trace(g, pattern).back();
    std::vector<Rank> ranks;
    for (Rank v = 0; v < g.n; ++v) {
        if (last[v])
            ranks.push_back(v);
    }
    return ranks;
}

std::vector<VertexId> naive_phi_table(const WheelerGraph &g, std::span<const VertexId> id_of_rank) {
    std::vector<VertexId> table(g.n, kNoPredecessor);
    for (Rank k = 1; k < g.n; ++k) {
        table[id_of_rank[k]] = id_of_rank[k - 1];
    }
    return table;
}

std::uint64_t naive_runs(std::span<const Label> labels) {
    std::uint64_t runs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i == 0 || labels[i] != labels[i - 1])
            ++runs;
    }
    return runs;
}

bool is_contiguous(std::span<const Rank> sorted_ranks) {
    return sorted_ranks.empty()
            || sorted_ranks.back() - sorted_ranks.front() + 1 == sorted_ranks.size();
}

bool check_contiguity(const WheelerGraph &g, std::span<const Label> pattern) {
    return is_contiguous(naive_match(g, pattern));
}

} // namespace wri::oracle
