#include "irregwalk/walkops.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <string>

#include "irregwalk/errors.hpp"

namespace irregwalk {

ConflictReport check_profile(const Graph& g, const DegreeProfile& p)
{
    ConflictReport report;
    for (const Edge& e : g.edges())
        if (p.degrees[e.u] == p.degrees[e.v])
            report.conflicts.push_back(e);
    return report;
}

ConflictReport check_irregularising(const Graph& g, const Walk& w)
{
    return check_profile(g, degree_profile(g, w));
}

Walk expand_normal_form(const NormalForm& nf)
{
    const auto& s = nf.base.vertices;
    Walk out;
    if (s.empty())
        return out;
    out.vertices.push_back(s[0]);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        int h = k < nf.half_turns.size() ? nf.half_turns[k] : 0;
        for (int r = 0; r < h; ++r) {
            out.vertices.push_back(s[k + 1]);
            out.vertices.push_back(s[k]);
        }
        out.vertices.push_back(s[k + 1]);
    }
    return out;
}

namespace {

using Seq = std::vector<Vertex>;

// Appends b to a; b must start where a ends.
void append(Seq& a, const Seq& b)
{
    if (b.empty())
        return;
    if (a.empty()) {
        a = b;
        return;
    }
    assert(a.back() == b.front());
    a.insert(a.end(), b.begin() + 1, b.end());
}

// n alternating traversals of xy starting at `from`.
Seq bounce(Vertex from, Vertex to, int n)
{
    Seq s{from};
    for (int k = 0; k < n; ++k)
        s.push_back(k % 2 == 0 ? to : from);
    return s;
}

Seq reversed(Seq s)
{
    std::reverse(s.begin(), s.end());
    return s;
}

// One gathering step of the equivalence argument, for edge {x, y}.
Seq gather(const Seq& w, Edge e)
{
    auto is_e = [&](std::size_t i) { return Edge::of(w[i], w[i + 1]) == e; };

    std::vector<Seq> parts;
    Seq cur{w[0]};
    int n = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (is_e(i)) {
            parts.push_back(cur);
            cur = Seq{w[i + 1]};
            ++n;
        } else {
            cur.push_back(w[i + 1]);
        }
    }
    parts.push_back(cur);
    if (n == 0)
        return w;

    Vertex x = parts.front().back();
    Vertex y = e.other(x);

    std::vector<Seq> wx, wy, wxy;
    for (std::size_t k = 1; k + 1 < parts.size(); ++k) {
        const Seq& p = parts[k];
        if (p.front() == x && p.back() == x)
            wx.push_back(p);
        else if (p.front() == y && p.back() == y)
            wy.push_back(p);
        else
            wxy.push_back(p.front() == x ? p : reversed(p));
    }

    Seq out = parts.front();
    for (const Seq& p : wx)
        append(out, p);
    if (!wxy.empty()) {
        append(out, wxy.front());
        for (const Seq& p : wy)
            append(out, p);
        append(out, bounce(y, x, n));
        for (std::size_t k = 1; k < wxy.size(); ++k)
            append(out, out.back() == wxy[k].front() ? wxy[k] : reversed(wxy[k]));
    } else if (n % 2 == 1) {
        append(out, bounce(x, y, n));
        for (const Seq& p : wy)
            append(out, p);
    } else {
        append(out, Seq{x, y});
        for (const Seq& p : wy)
            append(out, p);
        append(out, bounce(y, x, n - 1));
    }
    append(out, parts.back());
    return out;
}

void fill_parity_sets(const Graph& g, const std::vector<int>& counts, NormalForm& nf)
{
    for (int id = 0; id < g.size(); ++id) {
        if (counts[id] % 2 == 1)
            nf.e_odd.push_back(g.edge(id));
        else if (counts[id] > 0)
            nf.e_even.push_back(g.edge(id));
    }
}

} // namespace

NormalForm normalize_walk(const Graph& g, const Walk& w)
{
    if (w.vertices.empty())
        throw Error(ErrorCode::EmptyWalk, "cannot normalise the empty walk");
    auto counts = edge_counts(g, w);

    Seq cur = w.vertices;
    for (int id = 0; id < g.size(); ++id)
        if (counts[id] > 0)
            cur = gather(cur, g.edge(id));

    // Maximal runs of one edge become one base edge (odd run) or two (even run).
    NormalForm nf;
    nf.base.vertices.push_back(cur[0]);
    std::size_t i = 0;
    while (i + 1 < cur.size()) {
        Edge e = Edge::of(cur[i], cur[i + 1]);
        std::size_t k = i + 1;
        while (k + 1 < cur.size() && Edge::of(cur[k], cur[k + 1]) == e)
            ++k;
        int run = static_cast<int>(k - i);
        if (run % 2 == 1) {
            nf.base.vertices.push_back(cur[i + 1]);
            nf.half_turns.push_back((run - 1) / 2);
        } else {
            nf.base.vertices.push_back(cur[i + 1]);
            nf.base.vertices.push_back(cur[i]);
            nf.half_turns.push_back((run - 2) / 2);
            nf.half_turns.push_back(0);
        }
        i = k;
    }
    fill_parity_sets(g, counts, nf);
    return nf;
}

PathNormalForm normalize_path_walk(int path_length, const Walk& w)
{
    if (path_length < 1)
        throw Error(ErrorCode::InvalidWalk, "path length must be positive");
    if (w.vertices.empty())
        throw Error(ErrorCode::EmptyWalk, "cannot normalise the empty walk");
    for (std::size_t k = 0; k < w.vertices.size(); ++k) {
        Vertex v = w.vertices[k];
        if (v < 0 || v > path_length)
            throw Error(ErrorCode::InvalidWalk, "vertex " + std::to_string(v) + " is not on the path");
        if (k > 0 && std::abs(v - w.vertices[k - 1]) != 1)
            throw Error(ErrorCode::InvalidWalk, "consecutive vertices are not adjacent on the path");
    }

    PathNormalForm out;
    out.reversed = w.vertices.front() > w.vertices.back();
    out.i = std::min(w.vertices.front(), w.vertices.back());
    out.j = std::max(w.vertices.front(), w.vertices.back());
    auto [lo, hi] = std::minmax_element(w.vertices.begin(), w.vertices.end());
    out.m = *lo;
    out.M = *hi;
    out.t.assign(path_length, 0);
    for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k)
        ++out.t[std::min(w.vertices[k], w.vertices[k + 1])];

    const auto& t = out.t;
    const int m = out.m, i = out.i, j = out.j, M = out.M;
    auto& s = out.form.base.vertices;
    auto& h = out.form.half_turns;

    // u_i down to u_m: first passes, no half-turns
    s.push_back(i);
    for (int k = i - 1; k >= m; --k) {
        s.push_back(k);
        h.push_back(0);
    }
    // u_m up to u_M
    for (int k = m; k < M; ++k) {
        s.push_back(k + 1);
        if (k < i)
            h.push_back(t[k] / 2 - 1);
        else if (k < j)
            h.push_back((t[k] - 1) / 2);
        else
            h.push_back(0);
    }
    // u_M down to u_j: returns carry the right-hand half-turns
    for (int k = M - 1; k >= j; --k) {
        s.push_back(k);
        h.push_back(t[k] / 2 - 1);
    }

    for (int k = 0; k < path_length; ++k) {
        Edge e{k, k + 1};
        if (t[k] % 2 == 1)
            out.form.e_odd.push_back(e);
        else if (t[k] > 0)
            out.form.e_even.push_back(e);
    }
    return out;
}

} // namespace irregwalk
