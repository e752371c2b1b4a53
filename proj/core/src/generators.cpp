#include "irregwalk/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "irregwalk/errors.hpp"

namespace irregwalk {

Graph make_path(int n)
{
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k)
        edges.push_back({k, k + 1});
    return Graph::from_edges(n + 1, edges);
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw Error(ErrorCode::OrderTooSmall, "cycle needs length >= 3");
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k)
        edges.push_back(Edge::of(k, (k + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph make_complete(int n)
{
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.push_back({a, b});
    return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
            edges.push_back({x, a + y});
    return Graph::from_edges(a + b, edges);
}

Graph make_star(int k)
{
    return make_subdivided_star(k, 1);
}

Graph make_subdivided_star(int k, int l)
{
    std::vector<Edge> edges;
    for (int r = 0; r < k; ++r) {
        Vertex prev = 0;
        for (int s = 1; s <= l; ++s) {
            Vertex v = r * l + s;
            edges.push_back(Edge::of(prev, v));
            prev = v;
        }
    }
    return Graph::from_edges(1 + k * l, edges);
}

Graph make_hypercube(int d)
{
    const int n = 1 << d;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit) {
            int u = v ^ (1 << bit);
            if (v < u)
                edges.push_back({v, u});
        }
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, Rng& rng)
{
    if (n <= 1)
        return Graph::from_edges(std::max(n, 0), {});
    if (n == 2) {
        Edge e{0, 1};
        return Graph::from_edges(2, std::span<const Edge>(&e, 1));
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (int& c : code)
        c = pick(rng);
    std::vector<int> count(n, 0);
    for (int c : code)
        ++count[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (count[v] == 0)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(Edge::of(leaf, c));
        if (--count[c] == 0)
            leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back(Edge::of(a, b));
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng)
{
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.push_back({a, b});
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g))
            return g;
    }
}

Graph random_cubic_bipartite(int s, Rng& rng)
{
    if (s < 3)
        throw Error(ErrorCode::OrderTooSmall, "cubic bipartite graph needs s >= 3");
    const int n = 2 * s;
    std::vector<Edge> cycle;
    for (int k = 0; k < n; ++k)
        cycle.push_back(Edge::of(k, (k + 1) % n));
    std::set<Edge> used(cycle.begin(), cycle.end());

    std::vector<int> odd(s);
    for (int k = 0; k < s; ++k)
        odd[k] = 2 * k + 1;
    for (;;) {
        std::shuffle(odd.begin(), odd.end(), rng);
        bool ok = true;
        for (int k = 0; k < s && ok; ++k)
            ok = !used.count(Edge::of(2 * k, odd[k]));
        if (!ok)
            continue;
        std::vector<Edge> edges = cycle;
        for (int k = 0; k < s; ++k)
            edges.push_back(Edge::of(2 * k, odd[k]));
        return Graph::from_edges(n, edges);
    }
}

} // namespace irregwalk
