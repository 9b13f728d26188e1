#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wri/generators.hpp"
#include "wri/query.hpp"

namespace wri {
namespace {

using testing::g1;
using testing::labels;

TEST(StringPath, AbaIsFixture) {
    EXPECT_EQ(gen_string_path(labels("aba")).graph, g1());
}

TEST(StringPath, EmptyString) {
    auto g = gen_string_path(labels("")).graph;
    EXPECT_EQ(g.n, 1u);
    EXPECT_TRUE(g.edges.empty());
}

TEST(StringPath, UnaryStringIsOneRun) {
    EXPECT_EQ(build_index(gen_string_path(labels("aaaa")).graph).r, 1u);
}

TEST(StringPath, CountsMatchSubstringScan) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        const Label sigma = 1 + rng() % 4;
        auto s = random_string(rng() % 120, sigma, rng());
        auto instance = gen_string_path(s);
        ASSERT_TRUE(validate_wheeler(instance.graph).is_wheeler);
        auto ix = build_index(instance.graph);
        EXPECT_EQ(ix.upsilon, 1u);
        testing::for_each_pattern(sigma, 6, [&](const LabelString &p) {
            ASSERT_EQ(count(ix, p), testing::substring_occurrences(s, p));
        });
    }
}

TEST(StringCycle, TwoLetterCycle) {
    auto g = gen_string_cycle(labels("ab")).graph;
    EXPECT_EQ(g.n, 2u);
    EXPECT_EQ(g.m(), 2u);
    EXPECT_TRUE(validate_wheeler(g).is_wheeler);
    EXPECT_EQ(decompose_paths(g).upsilon(), 1u);
}

TEST(StringCycle, RejectsNonPrimitive) {
    EXPECT_THROW(gen_string_cycle(labels("aa")), std::invalid_argument);
    EXPECT_THROW(gen_string_cycle(labels("abab")), std::invalid_argument);
    EXPECT_THROW(gen_string_cycle(labels("")), std::invalid_argument);
    EXPECT_NO_THROW(gen_string_cycle(labels("a")));
    EXPECT_NO_THROW(gen_string_cycle(labels("aab")));
}

TEST(StringCycle, RandomPrimitiveStringsAreWheeler) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        const Label sigma = 2 + rng() % 3;
        auto s = testing::random_primitive(1 + rng() % 100, sigma, rng);
        auto g = gen_string_cycle(s).graph;
        EXPECT_TRUE(validate_wheeler(g).is_wheeler);
        EXPECT_EQ(decompose_paths(g).upsilon(), 1u);
    }
}

TEST(MultiPaths, TwoCopies) {
    auto g = gen_multi_paths(std::vector<LabelString>{ labels("ab"), labels("ab") }).graph;
    auto ix = build_index(g);
    EXPECT_EQ(ix.upsilon, 2u);
    EXPECT_EQ(count(ix, labels("b")), 2u);
}

TEST(MultiPaths, SingletonEqualsStringPath) {
    EXPECT_EQ(gen_multi_paths(std::vector<LabelString>{ labels("a") }).graph,
              gen_string_path(labels("a")).graph);
}

TEST(MultiPaths, CopiesOfOneLetter) {
    for (std::size_t k = 1; k <= 6; ++k) {
        std::vector<LabelString> strings(k, labels("a"));
        auto g = gen_multi_paths(strings).graph;
        EXPECT_TRUE(validate_wheeler(g).is_wheeler);
        EXPECT_EQ(decompose_paths(g).upsilon(), k);
    }
}

TEST(Trie, TwoBranches) {
    auto g = gen_trie(std::vector<LabelString>{ labels("ab"), labels("ac") }).graph;
    EXPECT_EQ(g.n, 4u);
    auto ix = build_index(g);
    EXPECT_EQ(count(ix, labels("a")), 1u);
    EXPECT_EQ(count(ix, labels("b")), 1u);
}

TEST(Trie, RootOnly) {
    auto g = gen_trie(std::vector<LabelString>{ labels("") }).graph;
    EXPECT_EQ(g.n, 1u);
    EXPECT_TRUE(g.edges.empty());
}

TEST(Generators, EveryFamilyIsWheeler) {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 400; ++t) {
        auto instance = testing::sweep_instance(t, 200, rng);
        EXPECT_TRUE(validate_wheeler(instance.graph).is_wheeler) << instance.provenance;
        EXPECT_LE(instance.graph.n, 200u) << instance.provenance;
    }
    for (int t = 0; t < 20; ++t) {
        auto instance = gen_random_trie(20, 8, 3, rng());
        EXPECT_TRUE(validate_wheeler(instance.graph).is_wheeler);
    }
}

TEST(RandomPatterns, DeterministicUnderSeed) {
    auto g = gen_string_path(random_string(100, 3, 5)).graph;
    EXPECT_EQ(random_patterns(g, 6, 42), random_patterns(g, 6, 42));
    EXPECT_NE(random_patterns(g, 6, 42), random_patterns(g, 6, 43));
}

TEST(RandomPatterns, WalksAlwaysMatch) {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 30; ++t) {
        auto g = testing::random_wheeler(2 + rng() % 40, 1 + rng() % 4, rng);
        if (g.edges.empty())
            continue;
        auto ix = build_index(g);
        auto patterns = random_patterns(g, 8, rng(), 40);
        for (std::size_t i = 0; i < patterns.size(); i += 2) {
            EXPECT_GE(count(ix, patterns[i]), 1u);
        }
    }
}

TEST(RandomPatterns, AbsentLabelNeverMatches) {
    auto g = gen_string_path(labels("abab")).graph;
    auto ix = build_index(g);
    EXPECT_EQ(count(ix, labels("ac")), 0u);
    EXPECT_EQ(count(ix, labels("c")), 0u);
}

} // namespace
} // namespace wri
