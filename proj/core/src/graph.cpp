#include "irregwalk/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "irregwalk/errors.hpp"

namespace irregwalk {

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");

    std::vector<Edge> sorted;
    sorted.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) + ") with n=" + std::to_string(n));
        if (raw.u == raw.v)
            throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(raw.u));
        sorted.push_back(Edge::of(raw.u, raw.v));
    }
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

    Graph g;
    g.adjacency_.assign(n, {});
    g.incidence_.assign(n, {});
    g.edges_ = std::move(sorted);

    // Edges are sorted by (u, v), so pushing in id order leaves every list sorted
    // except for the "u side" entries, which are fixed below.
    std::vector<std::vector<std::pair<Vertex, int>>> lists(n);
    for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
        const Edge& e = g.edges_[id];
        lists[e.u].emplace_back(e.v, id);
        lists[e.v].emplace_back(e.u, id);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(lists[v].begin(), lists[v].end());
        g.adjacency_[v].reserve(lists[v].size());
        g.incidence_[v].reserve(lists[v].size());
        for (auto [w, id] : lists[v]) {
            g.adjacency_[v].push_back(w);
            g.incidence_[v].push_back(id);
        }
    }
    return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    return edge_id(a, b) >= 0;
}

int Graph::edge_id(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b))
        return -1;
    const auto& list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b);
    if (it == list.end() || *it != b)
        return -1;
    return incidence_[a][static_cast<std::size_t>(it - list.begin())];
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> result(order());
    for (Vertex v = 0; v < order(); ++v)
        result[v] = degree(v);
    return result;
}

Graph build_graph(std::span<const Edge> edges, int n)
{
    return Graph::from_edges(n, edges);
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    std::vector<char> seen(g.order(), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbours(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == g.order();
}

bool is_nice(const Graph& g)
{
    if (g.order() < 2)
        return false;
    if (g.order() == 2 && g.size() == 1)
        return false;
    return is_connected(g);
}

bool is_locally_irregular(const Graph& g, std::span<const int> degrees)
{
    for (const Edge& e : g.edges())
        if (degrees[e.u] == degrees[e.v])
            return false;
    return true;
}

bool is_locally_irregular(const Graph& g)
{
    auto d = g.degrees();
    return is_locally_irregular(g, d);
}

} // namespace irregwalk
