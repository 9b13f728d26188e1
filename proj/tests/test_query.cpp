#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "wri/error.hpp"
#include "wri/generators.hpp"
#include "wri/oracle.hpp"
#include "wri/query.hpp"

namespace wri {
namespace {

using testing::g1;
using testing::labels;

class FixtureQueries : public ::testing::Test {
  protected:
    WheelerRIndex ix = build_index(g1());
};

TEST_F(FixtureQueries, OutRange) {
    EXPECT_EQ(out_range(ix, { 0, 3 }), (PositionRange{ 0, 2 }));
    EXPECT_FALSE(out_range(ix, { 2, 2 }));
    EXPECT_EQ(out_range(ix, full_interval(ix)), (PositionRange{ 0, ix.m - 1 }));
}

TEST_F(FixtureQueries, StepInterval) {
    EXPECT_EQ(step_interval(ix, { 0, 3 }, 0), (RankInterval{ 1, 2 }));
    EXPECT_EQ(step_interval(ix, { 1, 2 }, 1), (RankInterval{ 3, 3 }));
    EXPECT_FALSE(step_interval(ix, { 0, 3 }, 2));
    EXPECT_FALSE(step_interval(ix, { 2, 2 }, 0));
}

TEST_F(FixtureQueries, Count) {
    EXPECT_EQ(count(ix, labels("a")), 2u);
    EXPECT_EQ(count(ix, labels("ab")), 1u);
    EXPECT_EQ(count(ix, labels("ba")), 1u);
    EXPECT_EQ(count(ix, labels("bb")), 0u);
    EXPECT_EQ(count(ix, labels("")), 4u);
    EXPECT_EQ(count(ix, labels("aba")), 1u);
}

TEST_F(FixtureQueries, StepToeholdEarlierVertex) {
    auto step = step_toehold_detailed(ix, { { 1, 2 }, 3 }, 1);
    ASSERT_TRUE(step);
    EXPECT_EQ(step->state, (MatchState{ { 3, 3 }, 1 }));
    EXPECT_EQ(step->kind, ToeholdCase::EarlierVertexEdge);
    EXPECT_TRUE(step->marked);
}

TEST_F(FixtureQueries, StepToeholdLastVertexMarked) {
    auto step = step_toehold_detailed(ix, { { 3, 3 }, 1 }, 0);
    ASSERT_TRUE(step);
    EXPECT_EQ(step->state, (MatchState{ { 2, 2 }, 3 }));
    EXPECT_EQ(step->kind, ToeholdCase::LastVertexEdge);
    EXPECT_EQ(step->position, 2u);
    EXPECT_TRUE(step->marked);
}

TEST_F(FixtureQueries, FindInterval) {
    EXPECT_EQ(find_interval(ix, labels("a")), (MatchState{ { 1, 2 }, 3 }));
    EXPECT_EQ(find_interval(ix, labels("ab")), (MatchState{ { 3, 3 }, 1 }));
    EXPECT_FALSE(find_interval(ix, labels("ac")));
    EXPECT_THROW(find_interval(ix, labels("")), std::invalid_argument);
}

TEST_F(FixtureQueries, Phi) {
    EXPECT_EQ(phi(ix, 0), 2u);
    EXPECT_EQ(phi(ix, 3), 0u);
    EXPECT_EQ(phi(ix, 1), 3u);
    EXPECT_THROW(phi(ix, 2), FirstInOrderError);
    EXPECT_THROW(phi(ix, 4), std::out_of_range);
}

TEST_F(FixtureQueries, Locate) {
    EXPECT_EQ(locate(ix, labels("a")), (std::vector<VertexId>{ 3, 0 }));
    EXPECT_EQ(locate(ix, labels("ba")), (std::vector<VertexId>{ 3 }));
    EXPECT_TRUE(locate(ix, labels("zz")).empty());
    EXPECT_EQ(locate(ix, labels("")), (std::vector<VertexId>{ 1, 3, 0, 2 }));
}

TEST(Toehold, UnmarkedStepIncrementsIdentifier) {
    // path of "baaaa": the a-edge out of the vertex for "ba" is neither a run
    // end nor next to a path endpoint, so its position is unmarked
    auto g = gen_string_path(labels("baaaa")).graph;
    auto ix = build_index(g);
    auto d = decompose_paths(g);
    auto ids = assign_identifiers(g, d);

    auto first = find_interval(ix, labels("a"));
    ASSERT_TRUE(first);
    EXPECT_EQ(first->interval, (RankInterval{ 1, 4 }));
    auto step = step_toehold_detailed(ix, *first, 0);
    ASSERT_TRUE(step);
    EXPECT_EQ(step->kind, ToeholdCase::LastVertexEdge);
    EXPECT_FALSE(step->marked);
    EXPECT_EQ(step->state.last_id, first->last_id + 1);
    EXPECT_EQ(step->state.last_id, ids.id_of_rank[step->state.interval.e]);
}

TEST(Toehold, UnaryChainStepsEndAtSink) {
    auto g = gen_string_path(labels("aaaa")).graph;
    auto ix = build_index(g);
    auto ids = assign_identifiers(g, decompose_paths(g));
    std::vector<ToeholdStep> steps;
    auto states = trace(ix, labels("aaaa"), &steps);
    ASSERT_EQ(states.size(), 4u);
    for (const auto &st : states) {
        EXPECT_EQ(st.last_id, ids.id_of_rank[st.interval.e]);
    }
    for (const auto &step : steps) {
        EXPECT_EQ(step.kind, ToeholdCase::EarlierVertexEdge);
        EXPECT_TRUE(step.marked);
    }
}

TEST(Queries, ParallelEdgesAndSelfLoops) {
    // 0 -a-> 1 twice, 1 -b-> 2, 2 -b-> 2 self-loop
    auto g = make_graph(3, { { 0, 1, 0 }, { 0, 1, 0 }, { 1, 2, 1 }, { 2, 2, 1 } });
    ASSERT_TRUE(validate_wheeler(g).is_wheeler);
    auto ix = build_index(g);
    auto ids = assign_identifiers(g, decompose_paths(g));
    EXPECT_EQ(count(ix, labels("a")), 1u);
    EXPECT_EQ(count(ix, labels("b")), 1u);
    EXPECT_EQ(count(ix, labels("ab")), 1u);
    EXPECT_EQ(count(ix, labels("abbbb")), 1u);
    EXPECT_EQ(count(ix, labels("ba")), 0u);
    EXPECT_EQ(locate(ix, labels("abb")), (std::vector<VertexId>{ ids.id_of_rank[2] }));
    EXPECT_EQ(locate(ix, labels("a")), (std::vector<VertexId>{ ids.id_of_rank[1] }));
}

// Compares every query operation with the brute-force oracle on one graph.
void check_against_oracle(const WheelerGraph &g, std::size_t max_len) {
    auto ix = build_index(g);
    auto ids = assign_identifiers(g, decompose_paths(g));

    auto naive_phi = oracle::naive_phi_table(g, ids.id_of_rank);
    for (VertexId i = 0; i < g.n; ++i) {
        if (naive_phi[i] == oracle::kNoPredecessor) {
            EXPECT_THROW(phi(ix, i), FirstInOrderError);
        } else {
            EXPECT_EQ(phi(ix, i), naive_phi[i]);
        }
    }

    const Label sigma = std::max<Label>(g.sigma, 1);
    testing::for_each_pattern(sigma + 1, max_len, [&](const LabelString &p) {
        auto expected = oracle::naive_match(g, p);
        const auto k = count(ix, p);
        ASSERT_EQ(k, expected.size()) << to_wgf(g);
        ASSERT_TRUE(oracle::is_contiguous(expected));

        std::set<VertexId> expected_ids;
        for (Rank v : expected)
            expected_ids.insert(ids.id_of_rank[v]);
        auto found = locate(ix, p);
        ASSERT_EQ(found.size(), k);
        EXPECT_EQ(std::set<VertexId>(found.begin(), found.end()), expected_ids);

        // stepwise: interval equals the naive set and last_id tracks rank e
        auto sets = oracle::naive_trace(g, p);
        auto states = trace(ix, p);
        for (std::size_t t = 0; t < p.size(); ++t) {
            std::vector<Rank> ranks;
            for (Rank v = 0; v < g.n; ++v)
                if (sets[t + 1][v])
                    ranks.push_back(v);
            if (ranks.empty()) {
                EXPECT_EQ(states.size(), t);
                break;
            }
            ASSERT_LT(t, states.size());
            EXPECT_EQ(states[t].interval, (RankInterval{ ranks.front(), ranks.back() }));
            EXPECT_EQ(states[t].last_id, ids.id_of_rank[ranks.back()]);
        }
    });
}

TEST(Queries, OracleEquivalenceOnRandomWheelerGraphs) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 150; ++t) {
        check_against_oracle(testing::random_wheeler(1 + rng() % 30, 1 + rng() % 3, rng), 4);
    }
}

TEST(Queries, OracleEquivalenceOnGeneratedFamilies) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 120; ++t) {
        check_against_oracle(testing::sweep_instance(t, 40, rng).graph, 4);
    }
}

TEST(Queries, MonotoneRefinement) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 50; ++t) {
        auto g = testing::random_wheeler(1 + rng() % 40, 1 + rng() % 3, rng);
        auto ix = build_index(g);
        for (const auto &p : random_patterns(g, 8, rng(), 20)) {
            // a vertex reached by P is also reached by every suffix of P
            for (std::size_t skip = 0; skip < p.size(); ++skip) {
                std::span<const Label> longer(p.data() + skip, p.size() - skip);
                std::span<const Label> shorter(p.data() + skip + 1, p.size() - skip - 1);
                EXPECT_GE(count(ix, shorter), count(ix, longer));
            }
        }
    }
}

TEST(Queries, PhiChainVisitsEveryVertexOnce) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_wheeler(1 + rng() % 80, 1 + rng() % 4, rng);
        auto ix = build_index(g);
        auto ids = assign_identifiers(g, decompose_paths(g));
        auto all = locate(ix, {});
        ASSERT_EQ(all.size(), g.n);
        for (Rank k = 0; k < g.n; ++k) {
            EXPECT_EQ(all[k], ids.id_of_rank[g.n - 1 - k]);
        }
    }
}

} // namespace
} // namespace wri
