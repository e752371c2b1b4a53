#include <gtest/gtest.h>

#include <set>

#include <irregwalk/constructive.hpp>
#include <irregwalk/errors.hpp>
#include <irregwalk/exact.hpp>
#include <irregwalk/generators.hpp>
#include <irregwalk/walkops.hpp>

#include "enumerate.hpp"
#include "oracles.hpp"

using namespace irregwalk;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

std::set<Edge> support(const Graph& g, const Walk& w)
{
    std::set<Edge> s;
    auto c = edge_counts(g, w);
    for (int i = 0; i < g.size(); ++i)
        if (c[i] > 0)
            s.insert(g.edge(i));
    return s;
}

} // namespace

TEST(Guide, Lengths)
{
    for (const Graph& g : {make_path(2), make_complete(4), make_star(4)}) {
        Walk w = guiding_closed_walk(g);
        EXPECT_EQ(static_cast<int>(w.length()), 2 * (g.order() - 1));
        EXPECT_TRUE(w.is_closed());
        EXPECT_GT(g.degree(w.vertices.front()), 1);
        std::set<Vertex> seen(w.vertices.begin(), w.vertices.end());
        EXPECT_EQ(static_cast<int>(seen.size()), g.order());
    }
    EXPECT_EQ(guiding_closed_walk(make_path(2)).vertices.front(), 1);
    std::vector<Edge> two{{0, 1}, {2, 3}};
    EXPECT_EQ(code_of([&] { guiding_closed_walk(Graph::from_edges(4, two)); }), ErrorCode::NotConnected);
}

TEST(Greedy, RandomGraphsWithinBound)
{
    Rng rng(77);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_connected_graph(3 + it % 10, 0.3, rng);
        if (!is_nice(g))
            continue;
        Walk guide = guiding_closed_walk(g);
        auto b = greedy_irregularise(g, guide);
        EXPECT_TRUE(check_irregularising(g, b.walk).irregularising());
        EXPECT_EQ(b.bound, static_cast<int>(guide.length()) + 2 * g.size());
        EXPECT_LE(static_cast<int>(b.walk.length()), b.bound);
        EXPECT_LE(static_cast<int>(b.walk.length()), 2 * (g.size() + g.order() - 1));
        EXPECT_EQ(b.construction, Construction::GuideHalfTurns);

        // only guide edges plus one edge at the start vertex carry the walk
        Vertex u0 = guide.vertices.front(), last = guide.vertices[guide.length() - 1];
        Vertex v2 = -1;
        for (Vertex x : g.neighbours(u0))
            if (x != last) {
                v2 = x;
                break;
            }
        auto allowed = support(g, guide);
        allowed.insert(Edge::of(u0, v2));
        for (const Edge& e : support(g, normalize_walk(g, b.walk).base))
            EXPECT_TRUE(allowed.count(e)) << e.u << "-" << e.v;
    }
}

TEST(Greedy, NeverBeatsExact)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            auto b = greedy_irregularise(g, guiding_closed_walk(g));
            EXPECT_GE(static_cast<int>(b.walk.length()), exact_mlw(g).value);
        }
}

TEST(Greedy, Errors)
{
    Graph g = make_cycle(5);
    EXPECT_EQ(code_of([&] { greedy_irregularise(g, Walk{{0, 1, 2}}); }), ErrorCode::BadGuide);
    EXPECT_EQ(code_of([&] { greedy_irregularise(g, Walk{{0, 1, 0}}); }), ErrorCode::BadGuide);
    EXPECT_EQ(code_of([&] { greedy_irregularise(make_path(1), Walk{{0, 1, 0}}); }), ErrorCode::NotNice);
    // a leaf start has no second neighbour
    Graph p = make_path(3);
    EXPECT_EQ(code_of([&] { greedy_irregularise(p, Walk{{0, 1, 2, 3, 2, 1, 0}}); }), ErrorCode::BadGuide);
}

TEST(Chromatic, CompleteBipartiteFourFour)
{
    Graph g = make_complete_bipartite(4, 4);
    VertexColouring col{{0, 0, 0, 0, 1, 1, 1, 1}, 2};
    auto b = chromatic_irregularise(g, guiding_closed_walk(g), col);
    EXPECT_EQ(b.bound, 36);
    EXPECT_LE(static_cast<int>(b.walk.length()), 36);
    EXPECT_TRUE(check_irregularising(g, b.walk).irregularising());
    EXPECT_EQ(b.construction, Construction::ColourClasses);
}

TEST(Chromatic, RandomGraphsWithinBound)
{
    Rng rng(78);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_connected_graph(3 + it % 10, 0.35, rng);
        if (!is_nice(g))
            continue;
        Walk guide = guiding_closed_walk(g);
        auto col = greedy_vertex_colouring(g);
        auto b = chromatic_irregularise(g, guide, col);
        int bound = static_cast<int>(guide.length()) + (g.order() - 1) * (2 * col.k - 2) + 2 * max_degree(g);
        EXPECT_EQ(b.bound, bound);
        EXPECT_LE(static_cast<int>(b.walk.length()), bound);
        EXPECT_TRUE(check_irregularising(g, b.walk).irregularising());
    }
}

TEST(Chromatic, RejectsImproperColouring)
{
    Graph g = make_cycle(4);
    VertexColouring bad{{0, 0, 1, 1}, 2};
    EXPECT_EQ(code_of([&] { chromatic_irregularise(g, guiding_closed_walk(g), bad); }),
              ErrorCode::ImproperColouring);
}

TEST(Colouring, Greedy)
{
    EXPECT_EQ(greedy_vertex_colouring(make_complete(5)).k, 5);
    EXPECT_EQ(greedy_vertex_colouring(Graph::from_edges(3, {})).k, 1);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected_graph(8, 0.4, rng);
        auto c = greedy_vertex_colouring(g);
        EXPECT_NO_THROW(check_colouring(g, c));
        EXPECT_LE(c.k, max_degree(g) + 1);
    }
}

TEST(EulerTour, EveryEdgeTwice)
{
    Walk w = doubled_euler_tour(make_path(1));
    EXPECT_EQ(w.length(), 2u);
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected_graph(2 + i % 9, 0.4, rng);
        Walk t = doubled_euler_tour(g);
        EXPECT_TRUE(t.is_closed());
        for (int c : edge_counts(g, t))
            EXPECT_EQ(c, 2);
    }
}

TEST(Labelling, DegreesFollowFormula)
{
    Rng rng(79);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_connected_graph(3 + it % 6, 0.45, rng);
        if (!is_nice(g))
            continue;
        auto lab = exact_proper_labelling(g, LabellingObjective::MinSum);
        auto b = labelling_irregularise(g, lab);
        const int q = 3 * max_degree(g) / 2;
        auto p = degree_profile(g, b.walk);
        for (Vertex u = 0; u < g.order(); ++u)
            EXPECT_EQ(p.degrees[u], 3 * g.degree(u) + 2 * q * (lab.sums[u] - g.degree(u)));
        EXPECT_EQ(static_cast<int>(b.walk.length()), 2 * g.size() + 2 * q * (lab.label_sum() - g.size()));
        EXPECT_LE(static_cast<int>(b.walk.length()), b.bound);
        EXPECT_TRUE(check_irregularising(g, b.walk).irregularising());
        // x <= ML + m <= 3(m + Δx)
        int x = lab.label_sum();
        EXPECT_LE(x, static_cast<int>(b.walk.length()) + g.size());
        EXPECT_LE(static_cast<int>(b.walk.length()) + g.size(), 3 * (g.size() + max_degree(g) * x));
    }
}

TEST(Labelling, AllOnesGivesPlainDoubledTour)
{
    Graph g = make_star(3);
    auto lab = make_labelling(g, {1, 1, 1});
    auto b = labelling_irregularise(g, lab);
    EXPECT_EQ(b.walk.length(), 6u);
    EXPECT_EQ(b.construction, Construction::LabelledEulerTour);
}

TEST(Labelling, Validation)
{
    Graph k3 = make_complete(3);
    EXPECT_FALSE(is_proper_labelling(k3, {1, 1, 1}));
    EXPECT_EQ(code_of([&] { make_labelling(k3, {1, 1, 1}); }), ErrorCode::ImproperLabelling);
    EXPECT_EQ(code_of([&] { make_labelling(k3, {0, 1, 2}); }), ErrorCode::ImproperLabelling);
    EXPECT_EQ(code_of([&] { make_labelling(k3, {1, 2}); }), ErrorCode::ImproperLabelling);
    auto l = labelling_of_walk(k3, Walk{{0, 1, 2}});
    EXPECT_EQ(l.labels, (std::vector<int>{2, 1, 2}));
}

TEST(ExactLabelling, SmallExamples)
{
    Graph k3 = make_complete(3);
    EXPECT_EQ(exact_proper_labelling(k3, LabellingObjective::MinMaxLabel).max_label(), 3);
    Graph star = make_star(4);
    auto l = exact_proper_labelling(star, LabellingObjective::MinSum);
    EXPECT_EQ(l.label_sum(), star.size());
    EXPECT_EQ(code_of([&] { exact_proper_labelling(make_path(1), LabellingObjective::MinSum); }),
              ErrorCode::NotNice);
    EXPECT_EQ(code_of([&] { exact_proper_labelling(k3, LabellingObjective::MinSum, 2); }),
              ErrorCode::NoLabellingWithinCap);
}

TEST(ExactLabelling, MatchesEnumeration)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            auto o = oracle::labelling_optima(g, 3);
            EXPECT_EQ(exact_proper_labelling(g, LabellingObjective::MinSum).label_sum(), o.min_sum);
            EXPECT_EQ(exact_proper_labelling(g, LabellingObjective::MinMaxLabel).max_label(), o.min_max_label);
            EXPECT_EQ(exact_proper_labelling(g, LabellingObjective::MinMaxVertexSum).max_vertex_sum(),
                      o.min_max_vertex_sum);
        }
}

TEST(ExactLabelling, WalkBoundsOnSmallGraphs)
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : enumerate::connected_graphs(n)) {
            int ml = exact_mlw(g).value, me = exact_mew(g, 8).value, mv = exact_mvw(g, 16).value;
            // the walk labelling is proper, so labels up to ML + 1 always suffice
            int cap = std::max(3, ml + 1);
            EXPECT_LE(exact_proper_labelling(g, LabellingObjective::MinSum, cap).label_sum(), ml + g.size());
            EXPECT_LE(exact_proper_labelling(g, LabellingObjective::MinMaxLabel, cap).max_label(), me + 1);
            EXPECT_LE(exact_proper_labelling(g, LabellingObjective::MinMaxVertexSum, cap).max_vertex_sum(),
                      mv + max_degree(g));
        }
}
