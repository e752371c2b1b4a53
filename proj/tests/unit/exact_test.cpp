#include <gtest/gtest.h>

#include <irregwalk/errors.hpp>
#include <irregwalk/exact.hpp>
#include <irregwalk/generators.hpp>
#include <irregwalk/walkops.hpp>

#include "enumerate.hpp"
#include "oracles.hpp"

using namespace irregwalk;

namespace {

void expect_witness(const Graph& g, const ExactResult& r)
{
    ASSERT_TRUE(r.finite());
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(static_cast<int>(r.witness->length()), r.value);
    EXPECT_TRUE(check_irregularising(g, *r.witness).irregularising());
}

} // namespace

TEST(ExactMlw, KnownSmallValues)
{
    EXPECT_EQ(exact_mlw(make_complete(3)).value, 3);
    EXPECT_EQ(exact_mlw(make_path(2)).value, 0);
    EXPECT_EQ(exact_mlw(make_path(3)).value, 1);
    EXPECT_EQ(exact_mlw(make_star(5)).value, 0);
    expect_witness(make_complete(4), exact_mlw(make_complete(4)));
    auto k34 = exact_mlw(make_complete_bipartite(3, 4));
    EXPECT_EQ(k34.value, 0);
    EXPECT_TRUE(!k34.witness || k34.witness->empty());
    EXPECT_EQ(exact_mlw(make_path(4)).value, 2);
    EXPECT_EQ(exact_mlw(make_cycle(4)).value, 2);
}

TEST(ExactMlw, NonNiceInputs)
{
    EXPECT_THROW(exact_mlw(Graph::from_edges(1, {})), Error);
    EXPECT_TRUE(exact_mlw(make_path(1)).kind == ExactResult::Kind::Infinite);
    std::vector<Edge> two{{0, 1}, {1, 2}, {3, 4}, {4, 5}};
    EXPECT_TRUE(exact_mlw(Graph::from_edges(6, two)).kind == ExactResult::Kind::Infinite);
}

TEST(ExactMlw, BudgetExhaustion)
{
    auto r = exact_mlw(make_path(9), 5);
    EXPECT_EQ(r.kind, ExactResult::Kind::Exhausted);
    EXPECT_EQ(r.value, 5);
}

TEST(ExactMlw, MatchesBruteForceOnAllSmallGraphs)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            auto r = exact_mlw(g);
            auto o = oracle::min_walk_length(g, default_walk_budget(g));
            ASSERT_TRUE(o.has_value());
            EXPECT_EQ(r.value, *o);
            expect_witness(g, r);
        }
}

TEST(ExactMlw, ThreadsGiveSameAnswer)
{
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_graph(6, 0.5, rng);
        if (!is_nice(g))
            continue;
        auto a = exact_mlw(g, std::nullopt, 1);
        auto b = exact_mlw(g, std::nullopt, 3);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(ExactMultiset, AgreesWithWalkSearch)
{
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected_graph(3 + i % 5, 0.45, rng);
        if (!is_nice(g))
            continue;
        auto a = exact_mlw(g);
        auto b = exact_mlw_multiset(g);
        EXPECT_EQ(a.value, b.value);
        expect_witness(g, b);
        ASSERT_TRUE(b.multiset.has_value());
        EXPECT_EQ(*b.multiset, edge_counts(g, *b.witness));
    }
}

TEST(ExactLoads, MatchBruteForce)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            if (g.size() > 7)
                continue;
            auto me = exact_mew(g, 6);
            auto mv = exact_mvw(g, 10);
            ASSERT_TRUE(me.finite());
            ASSERT_TRUE(mv.finite());
            EXPECT_EQ(me.value, *oracle::min_edge_load(g, 6));
            EXPECT_EQ(mv.value, *oracle::min_vertex_load(g, 10));
            for (const auto* r : {&me, &mv}) {
                ASSERT_TRUE(r->witness.has_value());
                EXPECT_TRUE(check_irregularising(g, *r->witness).irregularising());
            }
            auto c = edge_counts(g, *me.witness);
            EXPECT_LE(*std::max_element(c.begin(), c.end()), me.value);
            auto d = degree_profile(g, *mv.witness).degrees;
            for (Vertex v = 0; v < g.order(); ++v)
                EXPECT_LE(d[v] - g.degree(v), mv.value);
        }
}

TEST(ExactLoads, CapTooSmall)
{
    EXPECT_EQ(exact_mew(make_complete(3), 0).kind, ExactResult::Kind::Exhausted);
}

TEST(ExactPhi, MatchesBruteForce)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            if (g.size() > 6)
                continue;
            auto r = exact_phi(g);
            ASSERT_TRUE(r.finite());
            EXPECT_EQ(r.value, *oracle::min_phi(g, 4));
        }
}

TEST(ExactPhi, ShortPaths)
{
    EXPECT_EQ(exact_phi(make_path(4)).value, 2);
    EXPECT_EQ(exact_phi(make_path(5)).value, 2);
    EXPECT_EQ(exact_phi(make_path(6)).value, 2);
}

TEST(ExactPath, SmallCases)
{
    auto a = exists_irregularising_path(make_path(3));
    ASSERT_TRUE(a.finite());
    EXPECT_EQ(a.value, 1);
    auto b = exists_irregularising_path(make_star(3));
    EXPECT_EQ(b.value, 0);
    // K3: every simple path or cycle leaves a conflict
    EXPECT_EQ(exists_irregularising_path(make_complete(3)).kind, ExactResult::Kind::Infinite);
    auto c = exists_irregularising_path(make_cycle(4));
    ASSERT_TRUE(c.finite());
    expect_witness(make_cycle(4), c);
    auto p = *c.witness;
    std::vector<Vertex> inner(p.vertices.begin(), p.vertices.end() - (p.is_closed() ? 1 : 0));
    std::sort(inner.begin(), inner.end());
    EXPECT_TRUE(std::adjacent_find(inner.begin(), inner.end()) == inner.end());
}

TEST(ExactPath, NeverShorterThanWalks)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            auto p = exists_irregularising_path(g);
            if (!p.finite())
                continue;
            expect_witness(g, p);
            EXPECT_LE(exact_mlw(g).value, p.value);
        }
}

TEST(ExactBudget, DefaultBudget)
{
    Graph g = make_complete(4);
    EXPECT_EQ(default_walk_budget(g), 2 * (6 + 4 - 1));
    EXPECT_EQ(traversal_cap(g, 0), 2 * (3 + 3 - 1));
}
