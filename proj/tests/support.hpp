#pragma once

// Shared fixtures and independent reference checks for the test binaries.
// Nothing here uses the index structures.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wri/generators.hpp"
#include "wri/graph.hpp"

namespace wri::testing {

// Path graph of "aba" (a = 0, b = 1); ranks in co-lex order e < a < aba < ab.
inline WheelerGraph g1() {
    return make_graph(4, { { 0, 1, 0 }, { 1, 3, 1 }, { 3, 2, 0 } });
}

inline LabelString labels(std::string_view ascii) {
    LabelString out;
    for (char ch : ascii) {
        out.push_back(static_cast<Label>(ch - 'a'));
    }
    return out;
}

// Checks every ordered pair of edges against the axioms.
inline bool pairwise_is_wheeler(const WheelerGraph &g) {
    std::vector<std::uint64_t> in(g.n, 0);
    for (const Edge &e : g.edges) {
        ++in[e.dst];
    }
    for (Rank u = 0; u < g.n; ++u) {
        for (Rank v = 0; v < g.n; ++v) {
            if (in[u] == 0 && in[v] > 0 && u > v)
                return false;
        }
    }
    for (const Edge &e : g.edges) {
        for (const Edge &f : g.edges) {
            if (e.label < f.label && !(e.dst < f.dst))
                return false;
            if (e.label == f.label && e.src < f.src && !(e.dst <= f.dst))
                return false;
        }
    }
    return true;
}

// Occurrences of p in s by direct comparison at every offset.
inline std::uint64_t substring_occurrences(std::span<const Label> s, std::span<const Label> p) {
    if (p.empty())
        return s.size() + 1;
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i + p.size() <= s.size(); ++i) {
        if (std::equal(p.begin(), p.end(), s.begin() + i))
            ++hits;
    }
    return hits;
}

/**
 * Random Wheeler multigraph: in-degree-0 vertices first, the remaining
 * vertices split into consecutive label blocks, and each label's edges formed
 * by pairing sorted random sources with sorted targets covering its block.
 * Produces branching, parallel edges, self-loops and cycles.
 */
inline WheelerGraph random_wheeler(std::uint64_t n, Label sigma, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> vertex(0, n - 1);
    const std::uint64_t sources_only = std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    std::vector<Label> block;
    std::uniform_int_distribution<Label> label(0, sigma - 1);
    for (Rank v = sources_only; v < n; ++v) {
        block.push_back(label(rng));
    }
    std::sort(block.begin(), block.end());

    std::vector<Edge> edges;
    std::size_t begin = 0;
    while (begin < block.size()) {
        std::size_t end = begin;
        while (end < block.size() && block[end] == block[begin])
            ++end;
        std::vector<Rank> targets;
        for (std::size_t i = begin; i < end; ++i) {
            targets.push_back(sources_only + i);
        }
        const std::uint64_t extra = std::uniform_int_distribution<std::uint64_t>(0, end - begin)(rng);
        for (std::uint64_t i = 0; i < extra; ++i) {
            targets.push_back(sources_only + std::uniform_int_distribution<std::size_t>(begin, end - 1)(rng));
        }
        std::vector<Rank> sources;
        for (std::size_t i = 0; i < targets.size(); ++i) {
            sources.push_back(vertex(rng));
        }
        std::sort(targets.begin(), targets.end());
        std::sort(sources.begin(), sources.end());
        for (std::size_t i = 0; i < targets.size(); ++i) {
            edges.push_back({ sources[i], targets[i], block[begin] });
        }
        begin = end;
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return make_graph(n, std::move(edges));
}

inline LabelString random_primitive(std::uint64_t length, Label sigma, std::mt19937_64 &rng) {
    while (true) {
        auto s = random_string(length, sigma, rng());
        if (is_primitive(s))
            return s;
    }
}

/**
 * Instance t of the acceptance sweep: string paths, string cycles,
 * multi-paths (sometimes with empty strings, i.e. isolated vertices) and
 * tries, each with at most max_n vertices over at most four labels.
 */
inline GeneratedInstance sweep_instance(std::uint64_t t, std::uint64_t max_n, std::mt19937_64 &rng) {
    const Label sigma = static_cast<Label>(1 + rng() % 4);
    switch (t % 4) {
        case 0: {
            const std::uint64_t len = rng() % max_n;
            return gen_string_path(random_string(len, sigma, rng()));
        }
        case 1: {
            // a single letter forces length 1 for primitivity
            const std::uint64_t len = sigma == 1 ? 1 : 1 + rng() % max_n;
            return gen_string_cycle(random_primitive(len, sigma, rng));
        }
        case 2: {
            const std::uint64_t k = 1 + rng() % 6;
            const std::uint64_t budget = max_n / k - 1;
            std::vector<LabelString> strings;
            for (std::uint64_t i = 0; i < k; ++i) {
                strings.push_back(random_string(rng() % (budget + 1), sigma, rng()));
            }
            return gen_multi_paths(strings);
        }
        default: {
            const std::uint64_t k = 1 + rng() % 20;
            const std::uint64_t max_len = std::max<std::uint64_t>(1, (max_n - 1) / k);
            std::vector<LabelString> strings;
            for (std::uint64_t i = 0; i < k; ++i) {
                strings.push_back(random_string(rng() % (max_len + 1), sigma, rng()));
            }
            return gen_trie(strings);
        }
    }
}

// Depth-first enumeration of every pattern over [0, sigma) of length 1..max_len.
inline void for_each_pattern(Label sigma, std::size_t max_len,
                             const std::function<void(const LabelString &)> &visit) {
    LabelString p;
    std::function<void()> rec = [&] {
        if (p.size() == max_len)
            return;
        for (Label c = 0; c < sigma; ++c) {
            p.push_back(c);
            visit(p);
            rec();
            p.pop_back();
        }
    };
    rec();
}

} // namespace wri::testing
