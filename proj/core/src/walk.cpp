#include "irregwalk/walk.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "irregwalk/errors.hpp"

namespace irregwalk {

Walk Walk::reversed() const
{
    return Walk{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

EdgeMultiset EdgeMultiset::of_walk(const Walk& w)
{
    EdgeMultiset result;
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        result.add(Edge::of(w.vertices[i], w.vertices[i + 1]));
    return result;
}

void EdgeMultiset::add(Edge e, int times)
{
    if (times <= 0)
        return;
    counts_[Edge::of(e.u, e.v)] += times;
    total_ += times;
}

int EdgeMultiset::count(Edge e) const
{
    auto it = counts_.find(Edge::of(e.u, e.v));
    return it == counts_.end() ? 0 : it->second;
}

std::vector<int> EdgeMultiset::by_edge_id(const Graph& g) const
{
    std::vector<int> result(g.size(), 0);
    for (auto [e, c] : counts_) {
        int id = g.edge_id(e.u, e.v);
        if (id < 0)
            throw Error(ErrorCode::InvalidWalk, "pair (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
        result[id] = c;
    }
    return result;
}

bool validate_walk(const Graph& g, const Walk& w)
{
    for (Vertex v : w.vertices)
        if (!g.contains(v))
            return false;
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!g.adjacent(w.vertices[i], w.vertices[i + 1]))
            return false;
    return true;
}

std::vector<int> edge_counts(const Graph& g, const Walk& w)
{
    if (!validate_walk(g, w))
        throw Error(ErrorCode::InvalidWalk, "walk uses a non-edge or an out-of-range vertex");
    std::vector<int> counts(g.size(), 0);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        ++counts[g.edge_id(w.vertices[i], w.vertices[i + 1])];
    return counts;
}

DegreeProfile degree_profile(const Graph& g, std::span<const int> counts)
{
    DegreeProfile p{g.degrees()};
    for (int id = 0; id < g.size(); ++id) {
        p.degrees[g.edge(id).u] += counts[id];
        p.degrees[g.edge(id).v] += counts[id];
    }
    return p;
}

DegreeProfile degree_profile(const Graph& g, const Walk& w)
{
    auto counts = edge_counts(g, w);
    return degree_profile(g, counts);
}

std::optional<Walk> realize_multiset(const Graph& g, std::span<const int> counts)
{
    const int n = g.order();
    if (std::accumulate(counts.begin(), counts.end(), 0) == 0)
        return Walk{};

    std::vector<int> fdeg(n, 0);
    for (int id = 0; id < g.size(); ++id) {
        if (counts[id] < 0)
            return std::nullopt;
        fdeg[g.edge(id).u] += counts[id];
        fdeg[g.edge(id).v] += counts[id];
    }

    std::vector<Vertex> odd;
    Vertex first_support = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (fdeg[v] % 2 != 0)
            odd.push_back(v);
        if (fdeg[v] > 0 && first_support < 0)
            first_support = v;
    }
    if (!odd.empty() && odd.size() != 2)
        return std::nullopt;

    // support connectivity
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{first_support};
    seen[first_support] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        auto nb = g.neighbours(v);
        auto ids = g.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (counts[ids[k]] > 0 && !seen[nb[k]]) {
                seen[nb[k]] = 1;
                stack.push_back(nb[k]);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (fdeg[v] > 0 && !seen[v])
            return std::nullopt;

    std::vector<int> remaining(counts.begin(), counts.end());
    std::vector<std::size_t> cursor(n, 0);
    std::vector<Vertex> circuit;
    stack.assign(1, odd.empty() ? first_support : odd.front());
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto nb = g.neighbours(v);
        auto ids = g.incident_edges(v);
        std::size_t& c = cursor[v];
        while (c < nb.size() && remaining[ids[c]] == 0)
            ++c;
        if (c == nb.size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            --remaining[ids[c]];
            stack.push_back(nb[c]);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return Walk{std::move(circuit)};
}

} // namespace irregwalk
