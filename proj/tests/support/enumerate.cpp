#include "enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace enumerate {

using irregwalk::Edge;
using irregwalk::Graph;

namespace {

// AHU encoding of the tree rooted at r
std::string encode(const std::vector<std::vector<int>>& adj, int r, int parent)
{
    std::vector<std::string> subs;
    for (int c : adj[r])
        if (c != parent)
            subs.push_back(encode(adj, c, r));
    std::sort(subs.begin(), subs.end());
    std::string s = "(";
    for (auto& x : subs)
        s += x;
    return s + ")";
}

std::string tree_key(const std::vector<std::vector<int>>& adj)
{
    // the minimum over all roots is canonical; fine at these sizes
    std::string best;
    for (int r = 0; r < static_cast<int>(adj.size()); ++r) {
        auto s = encode(adj, r, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

} // namespace

std::vector<Graph> free_trees(int n)
{
    std::vector<std::vector<std::vector<int>>> level{{{}}}; // one vertex
    for (int size = 1; size < n; ++size) {
        std::set<std::string> seen;
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& adj : level)
            for (int v = 0; v < size; ++v) {
                auto t = adj;
                t.emplace_back();
                t[v].push_back(size);
                t[size].push_back(v);
                if (seen.insert(tree_key(t)).second)
                    next.push_back(t);
            }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& adj : level) {
        std::vector<Edge> es;
        for (int v = 0; v < n; ++v)
            for (int u : adj[v])
                if (v < u)
                    es.push_back(Edge::of(v, u));
        out.push_back(Graph::from_edges(n, es));
    }
    return out;
}

std::vector<Graph> connected_graphs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.push_back({i, j});
    const int np = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int p = 0; p < np; ++p)
        index[pairs[p].first][pairs[p].second] = index[pairs[p].second][pairs[p].first] = p;

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    auto connected = [&](std::uint32_t mask) {
        std::uint32_t reached = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int p = 0; p < np; ++p)
                if (mask >> p & 1) {
                    auto [a, b] = pairs[p];
                    if ((frontier >> a & 1) && !(reached >> b & 1))
                        next |= 1u << b;
                    if ((frontier >> b & 1) && !(reached >> a & 1))
                        next |= 1u << a;
                }
            reached |= next;
            frontier = next;
        }
        return reached == (1u << n) - 1;
    };

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
        if (!connected(mask))
            continue;
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t m2 = 0;
            for (int e = 0; e < np; ++e)
                if (mask >> e & 1)
                    m2 |= 1u << index[p[pairs[e].first]][p[pairs[e].second]];
            canon = std::min(canon, m2);
        }
        if (!seen.insert(canon).second)
            continue;
        std::vector<Edge> es;
        for (int e = 0; e < np; ++e)
            if (canon >> e & 1)
                es.push_back(Edge::of(pairs[e].first, pairs[e].second));
        out.push_back(Graph::from_edges(n, es));
    }
    return out;
}

} // namespace enumerate
