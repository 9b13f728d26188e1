#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wri/graph.hpp"

namespace wri {

using LabelString = std::vector<Label>;

struct GeneratedInstance {
    WheelerGraph graph;
    // family tag and parameters, e.g. "string len=3"
    std::string provenance;
};

// Path spelling s, vertices ordered co-lexicographically by the label string
// read from the start vertex.
GeneratedInstance gen_string_path(std::span<const Label> s);

// Cycle spelling s. Throws std::invalid_argument unless s is non-empty and
// primitive (not a proper power), since otherwise two vertices would have
// identical incoming strings.
GeneratedInstance gen_string_cycle(std::span<const Label> s);

// Disjoint union of string paths; equal co-lex keys are ordered by input
// position.
GeneratedInstance gen_multi_paths(std::span<const LabelString> strings);

// Trie of the strings with edges labelled by the child character, nodes in
// co-lex order of their root-to-node strings.
GeneratedInstance gen_trie(std::span<const LabelString> strings);

bool is_primitive(std::span<const Label> s);

LabelString random_string(std::uint64_t length, Label sigma, std::uint64_t seed);
GeneratedInstance gen_random_trie(std::uint64_t count, std::uint64_t max_length, Label sigma,
                                  std::uint64_t seed);

// Deterministic under seed. Even slots are label sequences of random walks
// (so they match somewhere), odd slots are uniform strings over the alphabet.
std::vector<LabelString> random_patterns(const WheelerGraph &g,
                                         std::uint64_t max_length,
                                         std::uint64_t seed,
                                         std::uint64_t how_many = 32);

} // namespace wri
