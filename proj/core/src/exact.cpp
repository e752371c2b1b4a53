#include "irregwalk/exact.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "irregwalk/errors.hpp"

namespace irregwalk {

int default_walk_budget(const Graph& g)
{
    return 2 * (g.size() + g.order() - 1);
}

int traversal_cap(const Graph& g, int edge_id)
{
    const Edge& e = g.edge(edge_id);
    return 2 * (g.degree(e.u) + g.degree(e.v) - 1);
}

namespace {

void require_order(const Graph& g)
{
    if (g.order() <= 1)
        throw Error(ErrorCode::NotNice, "graphs with fewer than two vertices are not handled");
}

// Degrees of G+W kept together with the number of conflicting edges.
class LiveDegrees {
public:
    explicit LiveDegrees(const Graph& g) : g_(g), deg_(g.degrees())
    {
        for (const Edge& e : g.edges())
            conflicts_ += deg_[e.u] == deg_[e.v];
    }

    void bump(Vertex v, int delta)
    {
        for (Vertex u : g_.neighbours(v))
            conflicts_ -= deg_[u] == deg_[v];
        deg_[v] += delta;
        for (Vertex u : g_.neighbours(v))
            conflicts_ += deg_[u] == deg_[v];
    }

    int conflicts() const noexcept { return conflicts_; }
    int degree(Vertex v) const { return deg_[v]; }

private:
    const Graph& g_;
    std::vector<int> deg_;
    int conflicts_ = 0;
};

class WalkEnumerator {
public:
    WalkEnumerator(const Graph& g, int length) : g_(g), length_(length), live_(g) {}

    // First irregularising walk of the given length from `start`, in DFS order.
    std::optional<Walk> from(Vertex start)
    {
        path_.assign(1, start);
        if (dfs(start))
            return Walk{path_};
        return std::nullopt;
    }

private:
    bool dfs(Vertex at)
    {
        if (static_cast<int>(path_.size()) - 1 == length_)
            return live_.conflicts() == 0;
        for (Vertex next : g_.neighbours(at)) {
            live_.bump(at, 1);
            live_.bump(next, 1);
            path_.push_back(next);
            if (dfs(next))
                return true;
            path_.pop_back();
            live_.bump(next, -1);
            live_.bump(at, -1);
        }
        return false;
    }

    const Graph& g_;
    int length_;
    LiveDegrees live_;
    std::vector<Vertex> path_;
};

std::optional<Walk> walks_of_length(const Graph& g, int length, int threads)
{
    const int n = g.order();
    if (threads <= 1) {
        for (Vertex s = 0; s < n; ++s) {
            WalkEnumerator en(g, length);
            if (auto w = en.from(s))
                return w;
        }
        return std::nullopt;
    }

    std::atomic<int> next{0};
    std::atomic<int> best{n};
    std::vector<std::optional<Walk>> found(n);
    auto worker = [&] {
        for (;;) {
            int s = next.fetch_add(1);
            if (s >= n || s > best.load())
                return;
            WalkEnumerator en(g, length);
            if (auto w = en.from(s)) {
                found[s] = std::move(w);
                int cur = best.load();
                while (s < cur && !best.compare_exchange_weak(cur, s)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    int b = best.load();
    if (b < n)
        return found[b];
    return std::nullopt;
}

/*
  Depth-first search over per-edge multiplicities. Edges are ordered so
  that vertices see all their incident edges early (BFS order, grouped by
  the earlier endpoint); once a vertex's last incident edge is fixed its
  degree is final and conflicts with other final neighbours cut the branch.
*/
class MultisetSearch {
public:
    struct Limits {
        std::vector<int> edge_cap; // per edge id
        int vertex_load = std::numeric_limits<int>::max();
        bool walk = true;          // connected support, <= 2 odd vertices
    };

    MultisetSearch(const Graph& g, Limits limits) : g_(g), lim_(std::move(limits))
    {
        const int n = g.order();
        std::vector<int> pos(n, -1);
        int counter = 0;
        for (Vertex root = 0; root < n; ++root) {
            if (pos[root] >= 0)
                continue;
            std::vector<Vertex> queue{root};
            pos[root] = counter++;
            for (std::size_t h = 0; h < queue.size(); ++h)
                for (Vertex u : g.neighbours(queue[h]))
                    if (pos[u] < 0) {
                        pos[u] = counter++;
                        queue.push_back(u);
                    }
        }
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            auto key = [&](int id) {
                const Edge& e = g.edge(id);
                return std::pair{std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])};
            };
            return key(a) < key(b);
        });
        last_.assign(n, -1);
        for (int k = 0; k < g.size(); ++k) {
            const Edge& e = g.edge(order_[k]);
            last_[e.u] = k;
            last_[e.v] = k;
        }
        base_ = g.degrees();
    }

    /// Lexicographically first (in search order) multiset of total <= budget.
    std::optional<std::vector<int>> find(int budget)
    {
        const int n = g_.order();
        counts_.assign(g_.size(), 0);
        load_.assign(n, 0);
        final_.assign(n, 0);
        odd_final_ = 0;
        budget_ = budget;
        // Isolated vertices are final from the start.
        for (Vertex v = 0; v < n; ++v)
            if (last_[v] < 0 && !finalize(v))
                return std::nullopt;
        if (dfs(0, 0))
            return counts_;
        return std::nullopt;
    }

private:
    bool finalize(Vertex v)
    {
        final_[v] = 1;
        if (lim_.walk && load_[v] % 2 == 1 && ++odd_final_ > 2)
            return false;
        int dv = base_[v] + load_[v];
        for (Vertex u : g_.neighbours(v))
            if (final_[u] && u != v && base_[u] + load_[u] == dv)
                return false;
        return true;
    }

    void unfinalize(Vertex v)
    {
        final_[v] = 0;
        if (lim_.walk && load_[v] % 2 == 1)
            --odd_final_;
    }

    bool support_connected() const
    {
        const int n = g_.order();
        Vertex first = -1;
        for (Vertex v = 0; v < n && first < 0; ++v)
            if (load_[v] > 0)
                first = v;
        if (first < 0)
            return true;
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{first};
        seen[first] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            auto nb = g_.neighbours(v);
            auto ids = g_.incident_edges(v);
            for (std::size_t k = 0; k < nb.size(); ++k)
                if (counts_[ids[k]] > 0 && !seen[nb[k]]) {
                    seen[nb[k]] = 1;
                    ++reached;
                    stack.push_back(nb[k]);
                }
        }
        int support = 0;
        for (Vertex v = 0; v < n; ++v)
            support += load_[v] > 0;
        return reached == support;
    }

    bool dfs(int k, int used)
    {
        if (k == g_.size())
            return !lim_.walk || support_connected();
        const int id = order_[k];
        const Edge& e = g_.edge(id);
        int ub = std::min(lim_.edge_cap[id], budget_ - used);
        if (lim_.vertex_load != std::numeric_limits<int>::max())
            ub = std::min({ub, lim_.vertex_load - load_[e.u], lim_.vertex_load - load_[e.v]});
        for (int c = 0; c <= ub; ++c) {
            counts_[id] = c;
            load_[e.u] += c;
            load_[e.v] += c;
            bool ok = true;
            bool fu = false, fv = false;
            if (last_[e.u] == k) {
                fu = true;
                ok = finalize(e.u);
            }
            if (ok && last_[e.v] == k) {
                fv = true;
                ok = finalize(e.v);
            }
            if (ok && dfs(k + 1, used + c))
                return true;
            if (fv)
                unfinalize(e.v);
            if (fu)
                unfinalize(e.u);
            load_[e.u] -= c;
            load_[e.v] -= c;
        }
        counts_[id] = 0;
        return false;
    }

    const Graph& g_;
    Limits lim_;
    std::vector<int> order_;
    std::vector<int> last_;
    std::vector<int> base_;
    std::vector<int> counts_;
    std::vector<int> load_;
    std::vector<char> final_;
    int odd_final_ = 0;
    int budget_ = 0;
};

std::vector<int> all_caps(const Graph& g)
{
    std::vector<int> caps(g.size());
    for (int id = 0; id < g.size(); ++id)
        caps[id] = traversal_cap(g, id);
    return caps;
}

int sum(const std::vector<int>& v)
{
    return std::accumulate(v.begin(), v.end(), 0);
}

ExactResult from_multiset(const Graph& g, std::vector<int> counts, int value, bool walk)
{
    ExactResult r;
    r.kind = ExactResult::Kind::Finite;
    r.value = value;
    if (walk)
        r.witness = realize_multiset(g, counts);
    r.multiset = std::move(counts);
    return r;
}

// Smallest k in 0..cap for which `limits_for(k)` admits an irregularising walk multiset.
template <class F>
ExactResult smallest_cap(const Graph& g, int cap, F limits_for)
{
    require_order(g);
    if (!is_nice(g))
        return ExactResult::infinite();
    for (int k = 0; k <= cap; ++k) {
        MultisetSearch search(g, limits_for(k));
        if (auto counts = search.find(std::numeric_limits<int>::max() / 2))
            return from_multiset(g, *counts, k, true);
    }
    return ExactResult::exhausted(cap);
}

} // namespace

ExactResult exact_mlw(const Graph& g, std::optional<int> budget, int threads)
{
    require_order(g);
    if (!is_nice(g))
        return ExactResult::infinite();
    const int limit = budget.value_or(default_walk_budget(g));
    for (int k = 0; k <= limit; ++k) {
        std::optional<Walk> w;
        if (k == 0) {
            if (is_locally_irregular(g))
                w = Walk{};
        } else {
            w = walks_of_length(g, k, threads);
        }
        if (w) {
            ExactResult r;
            r.kind = ExactResult::Kind::Finite;
            r.value = k;
            r.witness = std::move(w);
            return r;
        }
    }
    return ExactResult::exhausted(limit);
}

ExactResult exact_mlw_multiset(const Graph& g, std::optional<int> budget)
{
    require_order(g);
    if (!is_nice(g))
        return ExactResult::infinite();
    const int limit = budget.value_or(default_walk_budget(g));
    MultisetSearch search(g, {all_caps(g), std::numeric_limits<int>::max(), true});
    for (int k = 0; k <= limit; ++k)
        if (auto counts = search.find(k))
            return from_multiset(g, *counts, sum(*counts), true);
    return ExactResult::exhausted(limit);
}

ExactResult exact_mew(const Graph& g, int cap)
{
    return smallest_cap(
        g, cap,
        [&](int k) {
            auto caps = all_caps(g);
            for (int& c : caps)
                c = std::min(c, k);
            return MultisetSearch::Limits{caps, std::numeric_limits<int>::max(), true};
        });
}

ExactResult exact_mvw(const Graph& g, int cap)
{
    return smallest_cap(
        g, cap, [&](int k) { return MultisetSearch::Limits{all_caps(g), k, true}; });
}

ExactResult exact_phi(const Graph& g, std::optional<int> budget)
{
    require_order(g);
    auto caps = all_caps(g);
    const int limit = budget.value_or(sum(caps));
    MultisetSearch search(g, {caps, std::numeric_limits<int>::max(), false});
    for (int k = 0; k <= limit; ++k)
        if (auto counts = search.find(k))
            return from_multiset(g, *counts, sum(*counts), false);
    if (limit >= sum(caps))
        return ExactResult::infinite();
    return ExactResult::exhausted(limit);
}

namespace {

class PathEnumerator {
public:
    PathEnumerator(const Graph& g, int length) : g_(g), length_(length), live_(g), on_path_(g.order(), 0) {}

    std::optional<Walk> from(Vertex start)
    {
        path_.assign(1, start);
        on_path_[start] = 1;
        bool ok = dfs(start);
        on_path_[start] = 0;
        if (ok)
            return Walk{path_};
        return std::nullopt;
    }

private:
    // Interior vertices are final; two adjacent final vertices must differ.
    bool interior_clash(Vertex v) const
    {
        for (Vertex u : g_.neighbours(v))
            if (on_path_[u] == 2 && live_.degree(u) == live_.degree(v))
                return true;
        return false;
    }

    bool dfs(Vertex at)
    {
        const int len = static_cast<int>(path_.size()) - 1;
        if (len == length_)
            return live_.conflicts() == 0;
        const Vertex start = path_.front();
        for (Vertex next : g_.neighbours(at)) {
            bool closing = next == start && len + 1 == length_ && length_ >= 3;
            if (on_path_[next] && !closing)
                continue;
            live_.bump(at, 1);
            live_.bump(next, 1);
            path_.push_back(next);
            char saved = on_path_[at];
            if (len > 0)
                on_path_[at] = 2;
            if (!closing)
                on_path_[next] = 1;
            bool clash = len > 0 && interior_clash(at);
            if (!clash && dfs(next))
                return true;
            if (!closing)
                on_path_[next] = 0;
            on_path_[at] = saved;
            path_.pop_back();
            live_.bump(next, -1);
            live_.bump(at, -1);
        }
        return false;
    }

    const Graph& g_;
    int length_;
    LiveDegrees live_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
};

} // namespace

ExactResult exists_irregularising_path(const Graph& g)
{
    require_order(g);
    ExactResult r;
    r.kind = ExactResult::Kind::Finite;
    if (is_locally_irregular(g)) {
        r.value = 0;
        r.witness = Walk{};
        return r;
    }
    for (int len = 1; len <= g.order(); ++len) {
        for (Vertex s = 0; s < g.order(); ++s) {
            PathEnumerator en(g, len);
            if (auto w = en.from(s)) {
                r.value = len;
                r.witness = std::move(w);
                return r;
            }
        }
    }
    return ExactResult::infinite();
}

} // namespace irregwalk
