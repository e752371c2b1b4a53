#include "irregwalk/gadget.hpp"

#include <string>

#include "irregwalk/errors.hpp"

namespace irregwalk {

std::vector<Side> bipartition(const Graph& h)
{
    const int n = h.order();
    std::vector<int> colour(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex u : h.neighbours(queue[i])) {
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[queue[i]];
                    queue.push_back(u);
                } else if (colour[u] == colour[queue[i]]) {
                    throw Error(ErrorCode::NotBipartite, "odd cycle through vertex " + std::to_string(u));
                }
            }
    }
    std::vector<Side> side(n);
    for (Vertex v = 0; v < n; ++v)
        side[v] = colour[v] == 0 ? Side::U : Side::V;
    return side;
}

namespace {

void check_input(const Graph& h)
{
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) != 3)
            throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                                 std::to_string(h.degree(v)));
    if (h.order() == 0)
        throw Error(ErrorCode::NotCubic, "empty graph");
    bipartition(h);
    if (!is_connected(h))
        throw Error(ErrorCode::NotConnected, "graph is not connected");
}

class Builder {
public:
    explicit Builder(const Graph& h) : n_(h.order()), edges_(h.edges()) {}

    Vertex node()
    {
        return n_++;
    }

    // Structural vertex attached to `to`, later padded with leaves up to `degree`.
    Vertex attach(Vertex to, int degree)
    {
        Vertex x = node();
        edges_.push_back(Edge::of(to, x));
        pending_.push_back({x, degree - 1});
        return x;
    }

    void pad(Vertex x, int leaves) { pending_.push_back({x, leaves}); }

    Graph finish()
    {
        for (auto [x, leaves] : pending_)
            for (int i = 0; i < leaves; ++i)
                edges_.push_back(Edge::of(x, node()));
        return Graph::from_edges(n_, edges_);
    }

private:
    struct Pending {
        Vertex x;
        int leaves;
    };
    int n_;
    std::vector<Edge> edges_;
    std::vector<Pending> pending_;
};

GadgetInstance frame(const Graph& h)
{
    GadgetInstance gi;
    gi.side = bipartition(h);
    for (Vertex v = 0; v < h.order(); ++v)
        gi.h_vertices.push_back(v);
    return gi;
}

} // namespace

GadgetInstance build_walk_gadget(const Graph& h)
{
    check_input(h);
    GadgetInstance gi = frame(h);
    Builder b(h);
    for (Vertex x = 0; x < h.order(); ++x) {
        if (gi.side[x] == Side::U) {
            b.attach(x, 5);
            b.attach(x, 6);
        } else {
            b.attach(x, 6);
            b.attach(x, 7);
            b.attach(x, 1);
        }
    }
    gi.g = b.finish();
    gi.k = h.order();
    return gi;
}

GadgetInstance build_path_gadget(const Graph& h)
{
    check_input(h);
    GadgetInstance gi = frame(h);
    Builder b(h);

    struct Hub {
        Vertex x;
        int degree;
        std::vector<int> raised;
    };
    for (Vertex x = 0; x < h.order(); ++x) {
        std::vector<Hub> hubs;
        if (gi.side[x] == Side::U)
            hubs = {{x, 5, {6, 6, 7, 7}}, {x, 6, {7, 7, 8, 8}}};
        else
            hubs = {{x, 6, {7, 7, 8, 8}}, {x, 7, {8, 8, 9, 9}}, {x, 6, {7, 7, 8, 8}}};
        for (const auto& hb : hubs) {
            Vertex c = b.attach(x, 1);
            for (int deg : hb.raised) {
                Vertex r = b.attach(c, 1);
                b.pad(r, deg - 1);
            }
            b.pad(c, hb.degree - 1 - static_cast<int>(hb.raised.size()));
        }
    }
    gi.g = b.finish();
    return gi;
}

namespace {

class CycleSearch {
public:
    explicit CycleSearch(const Graph& h) : h_(h), used_(h.order(), 0) {}

    std::optional<Walk> run()
    {
        path_ = {0};
        used_[0] = 1;
        if (!extend())
            return std::nullopt;
        path_.push_back(0);
        return Walk{path_};
    }

private:
    bool extend()
    {
        Vertex last = path_.back();
        if (static_cast<int>(path_.size()) == h_.order())
            return h_.adjacent(last, 0);
        for (Vertex u : h_.neighbours(last)) {
            if (used_[u])
                continue;
            used_[u] = 1;
            path_.push_back(u);
            if (extend())
                return true;
            path_.pop_back();
            used_[u] = 0;
        }
        return false;
    }

    const Graph& h_;
    std::vector<char> used_;
    std::vector<Vertex> path_;
};

} // namespace

std::optional<Walk> hamiltonian_cycle(const Graph& h)
{
    if (h.order() < 3)
        return std::nullopt;
    return CycleSearch(h).run();
}

Walk lift_walk(const GadgetInstance& gi, const Walk& w)
{
    Walk out;
    for (Vertex v : w.vertices)
        out.vertices.push_back(gi.h_vertices.at(v));
    return out;
}

} // namespace irregwalk
