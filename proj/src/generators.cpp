#include "wri/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wri {

namespace {

// Prefix doubling. Linear mode ranks the suffixes of text (a proper prefix of
// a suffix sorts first); cyclic mode ranks its rotations. Returns the rank of
// each starting position.
std::vector<std::uint64_t> doubling_ranks(std::span<const Label> text, bool cyclic) {
    const std::size_t n = text.size();
    std::vector<std::uint64_t> rank(text.begin(), text.end());
    std::vector<std::uint64_t> order(n);
    std::vector<std::uint64_t> next(n);
    std::iota(order.begin(), order.end(), 0);
    if (n == 0)
        return rank;

    for (std::size_t k = 1;; k *= 2) {
        // second key shifted by one so that "past the end" sorts first
        auto second = [&](std::uint64_t i) -> std::uint64_t {
            if (cyclic)
                return rank[(i + k) % n] + 1;
            return i + k < n ? rank[i + k] + 1 : 0;
        };
        std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
            return rank[a] != rank[b] ? rank[a] < rank[b] : second(a) < second(b);
        });
        next[order[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const bool same = rank[order[i]] == rank[order[i - 1]]
                    && second(order[i]) == second(order[i - 1]);
            next[order[i]] = next[order[i - 1]] + (same ? 0 : 1);
        }
        rank.swap(next);
        if (rank[order[n - 1]] == n - 1 || (cyclic && k >= n))
            break;
    }
    return rank;
}

// co-lex comparison of two label strings (compare from the last character)
bool colex_less(std::span<const Label> a, std::span<const Label> b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

} // namespace

bool is_primitive(std::span<const Label> s) {
    const std::size_t n = s.size();
    if (n == 0)
        return false;
    // s is a proper power iff it occurs in s+s at an offset strictly between 0 and n
    std::vector<Label> doubled(s.begin(), s.end());
    doubled.insert(doubled.end(), s.begin(), s.end());
    auto it = std::search(doubled.begin() + 1, doubled.end(), s.begin(), s.end());
    return static_cast<std::size_t>(it - doubled.begin()) == n;
}

GeneratedInstance gen_string_path(std::span<const Label> s) {
    const std::size_t len = s.size();
    // prefix s[0..k) corresponds to the suffix of reverse(s) starting at len-k
    std::vector<Label> reversed(s.rbegin(), s.rend());
    const auto suffix_rank = doubling_ranks(reversed, false);
    auto rank_of_prefix = [&](std::size_t k) -> Rank {
        return k == 0 ? 0 : suffix_rank[len - k] + 1;
    };

    std::vector<Edge> edges;
    edges.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        edges.push_back({ rank_of_prefix(k), rank_of_prefix(k + 1), s[k] });
    }
    return { make_graph(len + 1, std::move(edges)), "string len=" + std::to_string(len) };
}

GeneratedInstance gen_string_cycle(std::span<const Label> s) {
    if (!is_primitive(s))
        throw std::invalid_argument("cycle string must be non-empty and primitive");
    const std::size_t len = s.size();
    // vertex after edge k reads s[k], s[k-1], ... backwards around the cycle,
    // which is the rotation of reverse(s) starting at len-1-k
    std::vector<Label> reversed(s.rbegin(), s.rend());
    const auto rotation_rank = doubling_ranks(reversed, true);
    auto rank_after = [&](std::size_t k) -> Rank { return rotation_rank[len - 1 - k]; };

    std::vector<Edge> edges;
    edges.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        edges.push_back({ rank_after((k + len - 1) % len), rank_after(k), s[k] });
    }
    return { make_graph(len, std::move(edges)), "cycle len=" + std::to_string(len) };
}

GeneratedInstance gen_multi_paths(std::span<const LabelString> strings) {
    if (strings.empty())
        throw std::invalid_argument("multi-path family needs at least one string");

    struct Vertex {
        std::size_t string;
        std::size_t length; // prefix length
    };
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t k = 0; k <= strings[i].size(); ++k) {
            vertices.push_back({ i, k });
        }
    }
    std::sort(vertices.begin(), vertices.end(), [&](const Vertex &a, const Vertex &b) {
        std::span<const Label> x(strings[a.string].data(), a.length);
        std::span<const Label> y(strings[b.string].data(), b.length);
        if (colex_less(x, y))
            return true;
        if (colex_less(y, x))
            return false;
        return a.string < b.string;
    });

    std::vector<std::vector<Rank>> rank(strings.size());
    for (std::size_t i = 0; i < strings.size(); ++i) {
        rank[i].resize(strings[i].size() + 1);
    }
    for (Rank r = 0; r < vertices.size(); ++r) {
        rank[vertices[r].string][vertices[r].length] = r;
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t k = 0; k < strings[i].size(); ++k) {
            edges.push_back({ rank[i][k], rank[i][k + 1], strings[i][k] });
        }
    }
    return { make_graph(vertices.size(), std::move(edges)),
             "multi paths=" + std::to_string(strings.size()) };
}

GeneratedInstance gen_trie(std::span<const LabelString> strings) {
    if (strings.empty())
        throw std::invalid_argument("trie family needs at least one string");

    struct ColexLess {
        bool operator()(const LabelString &a, const LabelString &b) const {
            return colex_less(a, b);
        }
    };
    // distinct root-to-node strings, already in co-lex order
    std::map<LabelString, Rank, ColexLess> nodes;
    for (const auto &s : strings) {
        for (std::size_t k = 0; k <= s.size(); ++k) {
            nodes.emplace(LabelString(s.begin(), s.begin() + k), 0);
        }
    }
    Rank next = 0;
    for (auto &[key, rank] : nodes) {
        rank = next++;
    }

    std::vector<Edge> edges;
    for (const auto &[key, rank] : nodes) {
        if (key.empty())
            continue;
        const LabelString parent(key.begin(), key.end() - 1);
        edges.push_back({ nodes.at(parent), rank, key.back() });
    }
    return { make_graph(nodes.size(), std::move(edges)),
             "trie strings=" + std::to_string(strings.size()) };
}

LabelString random_string(std::uint64_t length, Label sigma, std::uint64_t seed) {
    if (sigma == 0)
        throw std::invalid_argument("alphabet must be non-empty");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Label> label(0, sigma - 1);
    LabelString s(length);
    for (auto &c : s) {
        c = label(rng);
    }
    return s;
}

GeneratedInstance gen_random_trie(std::uint64_t count, std::uint64_t max_length, Label sigma,
                                  std::uint64_t seed) {
    if (count == 0)
        throw std::invalid_argument("trie family needs at least one string");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> length(0, max_length);
    std::vector<LabelString> strings;
    for (std::uint64_t i = 0; i < count; ++i) {
        strings.push_back(random_string(length(rng), sigma, rng()));
    }
    auto instance = gen_trie(strings);
    instance.provenance += " seed=" + std::to_string(seed);
    return instance;
}

std::vector<LabelString> random_patterns(const WheelerGraph &g,
                                         std::uint64_t max_length,
                                         std::uint64_t seed,
                                         std::uint64_t how_many) {
    std::vector<LabelString> patterns;
    if (max_length == 0)
        return std::vector<LabelString>(how_many);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> length(1, max_length);

    // out-edges grouped by source for the walks
    std::vector<std::vector<std::uint64_t>> out(g.n);
    for (std::uint64_t i = 0; i < g.m(); ++i) {
        out[g.edges[i].src].push_back(i);
    }

    const Label alphabet = std::max<Label>(g.sigma, 1);
    std::uniform_int_distribution<Label> label(0, alphabet - 1);
    for (std::uint64_t t = 0; t < how_many; ++t) {
        const std::uint64_t len = length(rng);
        LabelString p;
        if (t % 2 == 0 && g.m() > 0) {
            std::uint64_t edge = std::uniform_int_distribution<std::uint64_t>(0, g.m() - 1)(rng);
            while (true) {
                p.push_back(g.edges[edge].label);
                const auto &next = out[g.edges[edge].dst];
                if (p.size() == len || next.empty())
                    break;
                edge = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
            }
        } else {
            for (std::uint64_t i = 0; i < len; ++i) {
                p.push_back(label(rng));
            }
        }
        patterns.push_back(std::move(p));
    }
    return patterns;
}

} // namespace wri
