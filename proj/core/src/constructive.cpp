#include "irregwalk/constructive.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "irregwalk/errors.hpp"

namespace irregwalk {

int ProperLabelling::label_sum() const
{
    return std::accumulate(labels.begin(), labels.end(), 0);
}

int ProperLabelling::max_label() const
{
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

int ProperLabelling::max_vertex_sum() const
{
    return sums.empty() ? 0 : *std::max_element(sums.begin(), sums.end());
}

namespace {

std::vector<int> vertex_sums(const Graph& g, const std::vector<int>& labels)
{
    std::vector<int> sums(g.order(), 0);
    for (int id = 0; id < g.size(); ++id) {
        sums[g.edge(id).u] += labels[id];
        sums[g.edge(id).v] += labels[id];
    }
    return sums;
}

} // namespace

bool is_proper_labelling(const Graph& g, const std::vector<int>& labels)
{
    if (static_cast<int>(labels.size()) != g.size())
        return false;
    if (std::any_of(labels.begin(), labels.end(), [](int l) { return l < 1; }))
        return false;
    return is_locally_irregular(g, vertex_sums(g, labels));
}

ProperLabelling make_labelling(const Graph& g, std::vector<int> labels)
{
    if (!is_proper_labelling(g, labels))
        throw Error(ErrorCode::ImproperLabelling, "labelling is not proper");
    auto sums = vertex_sums(g, labels);
    return ProperLabelling{std::move(labels), std::move(sums)};
}

ProperLabelling labelling_of_walk(const Graph& g, const Walk& w)
{
    auto labels = edge_counts(g, w);
    for (int& l : labels)
        ++l;
    auto sums = vertex_sums(g, labels);
    return ProperLabelling{std::move(labels), std::move(sums)};
}

void check_colouring(const Graph& g, const VertexColouring& col)
{
    if (static_cast<int>(col.colours.size()) != g.order())
        throw Error(ErrorCode::ImproperColouring, "colouring has the wrong size");
    for (int c : col.colours)
        if (c < 0 || c >= col.k)
            throw Error(ErrorCode::ImproperColouring, "colour out of range");
    for (const Edge& e : g.edges())
        if (col.colours[e.u] == col.colours[e.v])
            throw Error(ErrorCode::ImproperColouring,
                        "vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " share a colour");
}

Walk guiding_closed_walk(const Graph& g)
{
    if (g.order() < 2)
        throw Error(ErrorCode::NotNice, "need at least two vertices");
    if (!is_connected(g))
        throw Error(ErrorCode::NotConnected, "graph is not connected");

    Vertex root = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 1) {
            root = v;
            break;
        }

    Walk w{{root}};
    std::vector<char> seen(g.order(), 0);
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        auto nb = g.neighbours(v);
        while (next < nb.size() && seen[nb[next]])
            ++next;
        if (next == nb.size()) {
            stack.pop_back();
            if (!stack.empty())
                w.vertices.push_back(stack.back().first);
            continue;
        }
        Vertex child = nb[next++];
        seen[child] = 1;
        w.vertices.push_back(child);
        stack.emplace_back(child, 0);
    }
    return w;
}

namespace {

struct Sweep {
    const Graph& g;
    std::vector<Vertex> u;     // guide vertices u_0..u_p
    int p = 0;
    Vertex v2 = -1;
    std::vector<int> last;     // last guide index of each vertex
    std::vector<int> deg;      // current degrees in G+W'
    std::vector<char> settled;
    Walk out;

    void step(Vertex from, Vertex to)
    {
        out.vertices.push_back(to);
        ++deg[from];
        ++deg[to];
    }

    void half_turns(Vertex here, Vertex there, int h)
    {
        for (int r = 0; r < h; ++r) {
            step(here, there);
            step(there, here);
        }
    }

    bool differs_from_settled(Vertex v, int value) const
    {
        for (Vertex x : g.neighbours(v))
            if (settled[x] && deg[x] == value)
                return false;
        return true;
    }

    bool differs_from_others(Vertex v, Vertex skip, int value) const
    {
        for (Vertex x : g.neighbours(v))
            if (x != skip && deg[x] == value)
                return false;
        return true;
    }
};

Sweep start_sweep(const Graph& g, const Walk& guide)
{
    if (!is_nice(g))
        throw Error(ErrorCode::NotNice, "graph is not nice");
    if (guide.length() < 2 || !guide.is_closed() || !validate_walk(g, guide))
        throw Error(ErrorCode::BadGuide, "guide must be a closed walk of the graph");

    Sweep s{g, guide.vertices, static_cast<int>(guide.length()), -1, {}, g.degrees(), {}, {}};
    s.last.assign(g.order(), -1);
    for (int i = 0; i <= s.p; ++i)
        s.last[s.u[i]] = i;
    if (std::any_of(s.last.begin(), s.last.end(), [](int l) { return l < 0; }))
        throw Error(ErrorCode::BadGuide, "guide does not visit every vertex");
    const Vertex u0 = s.u[0];
    if (g.degree(u0) < 2)
        throw Error(ErrorCode::BadGuide, "guide must start at a vertex of degree > 1");
    for (Vertex x : g.neighbours(u0))
        if (x != s.u[s.p - 1]) {
            s.v2 = x;
            break;
        }
    s.settled.assign(g.order(), 0);
    s.out.vertices.push_back(u0);
    return s;
}

} // namespace

BoundedWitness greedy_irregularise(const Graph& g, const Walk& guide)
{
    Sweep s = start_sweep(g, guide);
    const int p = s.p;
    const Vertex up = s.u[p];

    for (int i = 0; i < p; ++i) {
        const Vertex ui = s.u[i], next = s.u[i + 1];
        s.step(ui, next);
        if (s.last[ui] != i || ui == s.v2)
            continue;
        int h = 0;
        for (;; ++h) {
            int d = s.deg[ui] + 2 * h;
            bool ok = s.differs_from_settled(ui, d);
            if (i == p - 1)
                ok = ok && s.deg[up] + 2 * h != s.deg[s.v2];
            if (ok)
                break;
        }
        s.half_turns(next, ui, h);
        s.settled[ui] = 1;
    }

    int h = 0;
    while (!s.differs_from_others(up, s.v2, s.deg[up] + 2 * h) || !s.differs_from_others(s.v2, up, s.deg[s.v2] + 2 * h))
        ++h;
    s.half_turns(up, s.v2, h);

    return BoundedWitness{std::move(s.out), p + 2 * g.size(), Construction::GuideHalfTurns};
}

namespace {

int colour_class(int degree, int k)
{
    return ((degree + 1) / 2 - 1) % k;
}

} // namespace

BoundedWitness chromatic_irregularise(const Graph& g, const Walk& guide, const VertexColouring& col)
{
    Sweep s = start_sweep(g, guide);
    check_colouring(g, col);
    const int p = s.p, k = col.k;
    const Vertex up = s.u[p];

    for (int i = 0; i < p; ++i) {
        const Vertex ui = s.u[i], next = s.u[i + 1];
        s.step(ui, next);
        if (s.last[ui] != i || ui == s.v2)
            continue;
        int h = 0;
        for (;; ++h) {
            bool ok = colour_class(s.deg[ui] + 2 * h, k) == col.colours[ui];
            if (i == p - 1)
                ok = ok && s.deg[up] + 2 * h != s.deg[s.v2];
            if (ok)
                break;
        }
        s.half_turns(next, ui, h);
        s.settled[ui] = 1;
    }

    // Back and forth along u_p v_2: both degrees grow by the walk length.
    int len = 0;
    while (!s.differs_from_others(up, s.v2, s.deg[up] + len) || !s.differs_from_others(s.v2, up, s.deg[s.v2] + len))
        ++len;
    for (int r = 0; r < len; ++r)
        s.step(r % 2 == 0 ? up : s.v2, r % 2 == 0 ? s.v2 : up);

    const int n = g.order();
    const int bound = p + (n - 1) * (2 * k - 2) + 2 * max_degree(g);
    return BoundedWitness{std::move(s.out), bound, Construction::ColourClasses};
}

Walk doubled_euler_tour(const Graph& g)
{
    if (!is_connected(g))
        throw Error(ErrorCode::NotConnected, "graph is not connected");
    if (g.size() == 0)
        return g.order() > 0 ? Walk{{0}} : Walk{};
    std::vector<int> twice(g.size(), 2);
    return *realize_multiset(g, twice);
}

BoundedWitness labelling_irregularise(const Graph& g, const ProperLabelling& lab)
{
    if (!is_nice(g))
        throw Error(ErrorCode::NotNice, "graph is not nice");
    if (!is_proper_labelling(g, lab.labels))
        throw Error(ErrorCode::ImproperLabelling, "labelling is not proper");

    const int q = 3 * max_degree(g) / 2;
    Walk tour = doubled_euler_tour(g);
    std::vector<int> seen(g.size(), 0);
    Walk out{{tour.vertices.front()}};
    for (std::size_t i = 0; i + 1 < tour.vertices.size(); ++i) {
        Vertex a = tour.vertices[i], b = tour.vertices[i + 1];
        int id = g.edge_id(a, b);
        out.vertices.push_back(b);
        if (++seen[id] == 2)
            for (int r = 0; r < q * (lab.labels[id] - 1); ++r) {
                out.vertices.push_back(a);
                out.vertices.push_back(b);
            }
    }
    const int m = g.size();
    const int x = std::accumulate(lab.labels.begin(), lab.labels.end(), 0);
    return BoundedWitness{std::move(out), 2 * m + 2 * q * (x - m), Construction::LabelledEulerTour};
}

VertexColouring greedy_vertex_colouring(const Graph& g)
{
    VertexColouring col;
    col.colours.assign(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<char> used(g.degree(v) + 1, 0);
        for (Vertex u : g.neighbours(v))
            if (col.colours[u] >= 0 && col.colours[u] <= g.degree(v))
                used[col.colours[u]] = 1;
        int c = 0;
        while (used[c])
            ++c;
        col.colours[v] = c;
        col.k = std::max(col.k, c + 1);
    }
    return col;
}

namespace {

class LabellingSearch {
public:
    LabellingSearch(const Graph& g, LabellingObjective obj, int cap) : g_(g), obj_(obj), cap_(cap)
    {
        last_.assign(g.order(), -1);
        remaining_.assign(g.order(), 0);
        for (int id = 0; id < g.size(); ++id) {
            last_[g.edge(id).u] = id;
            last_[g.edge(id).v] = id;
            ++remaining_[g.edge(id).u];
            ++remaining_[g.edge(id).v];
        }
        labels_.assign(g.size(), 0);
        sums_.assign(g.order(), 0);
    }

    std::optional<std::vector<int>> run()
    {
        dfs(0, 0, 0);
        return best_labels_;
    }

private:
    // Lower bound on the objective of any completion.
    int bound(int id, int sum, int max_label) const
    {
        switch (obj_) {
        case LabellingObjective::MinSum:
            return sum + (g_.size() - id);
        case LabellingObjective::MinMaxLabel:
            return std::max(max_label, 1);
        case LabellingObjective::MinMaxVertexSum: {
            int b = 0;
            for (Vertex v = 0; v < g_.order(); ++v)
                b = std::max(b, sums_[v] + remaining_[v]);
            return b;
        }
        }
        return 0;
    }

    bool final_ok(Vertex v) const
    {
        for (Vertex u : g_.neighbours(v))
            if (last_[u] < next_id_ && sums_[u] == sums_[v])
                return false;
        return true;
    }

    void dfs(int id, int sum, int max_label)
    {
        if (bound(id, sum, max_label) >= best_)
            return;
        if (id == g_.size()) {
            best_ = bound(id, sum, max_label);
            best_labels_ = labels_;
            return;
        }
        const Edge& e = g_.edge(id);
        for (int l = 1; l <= cap_; ++l) {
            labels_[id] = l;
            sums_[e.u] += l;
            sums_[e.v] += l;
            --remaining_[e.u];
            --remaining_[e.v];
            next_id_ = id + 1;
            bool ok = (last_[e.u] != id || final_ok(e.u)) && (last_[e.v] != id || final_ok(e.v));
            if (ok)
                dfs(id + 1, sum + l, std::max(max_label, l));
            ++remaining_[e.u];
            ++remaining_[e.v];
            sums_[e.u] -= l;
            sums_[e.v] -= l;
        }
        labels_[id] = 0;
    }

    const Graph& g_;
    LabellingObjective obj_;
    int cap_;
    std::vector<int> last_;
    std::vector<int> remaining_;
    std::vector<int> labels_;
    std::vector<int> sums_;
    int next_id_ = 0;
    int best_ = std::numeric_limits<int>::max();
    std::optional<std::vector<int>> best_labels_;
};

} // namespace

ProperLabelling exact_proper_labelling(const Graph& g, LabellingObjective objective, int max_label)
{
    if (!is_nice(g))
        throw Error(ErrorCode::NotNice, "graph is not nice");
    LabellingSearch search(g, objective, max_label);
    auto labels = search.run();
    if (!labels)
        throw Error(ErrorCode::NoLabellingWithinCap, "no proper labelling with labels <= " + std::to_string(max_label));
    return make_labelling(g, std::move(*labels));
}

} // namespace irregwalk
