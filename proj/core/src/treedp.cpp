#include "irregwalk/treedp.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "irregwalk/errors.hpp"

namespace irregwalk {

RootedTree RootedTree::from_graph(const Graph& g, Vertex root)
{
    const int n = g.order();
    if (n == 0 || g.size() != n - 1 || !is_connected(g))
        throw Error(ErrorCode::NotATree, "graph is not a tree");
    if (!g.contains(root))
        throw Error(ErrorCode::VertexOutOfRange, "root " + std::to_string(root) + " out of range");

    RootedTree t{g, root, std::vector<Vertex>(n, -1), std::vector<std::vector<Vertex>>(n)};
    std::vector<Vertex> queue{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Vertex v = queue[h];
        for (Vertex u : g.neighbours(v))
            if (!seen[u]) {
                seen[u] = 1;
                t.parent[u] = v;
                t.children[v].push_back(u);
                queue.push_back(u);
            }
    }
    return t;
}

PsiTable::PsiTable(int dim)
    : dim_(dim),
      cost_(static_cast<std::size_t>(kClasses) * dim * dim, kInfinite),
      choice_(static_cast<std::size_t>(kClasses) * dim * dim)
{
}

int PsiTable::psi(Shape s, int w, int d) const
{
    if (w < 0 || d < 0 || w >= dim_ || d >= dim_)
        return kInfinite;
    int best = cost(Empty, w, d);
    if (s == Shape::Zero)
        return best;
    best = std::min(best, cost(Closed, w, d));
    if (s == Shape::InOut)
        return best;
    best = std::min(best, cost(EndsAtRoot, w, d));
    if (s == Shape::In)
        return best;
    best = std::min(best, cost(Passes, w, d));
    if (s == Shape::Root)
        return best;
    return std::min({best, cost(Avoids, w, d), cost(AvoidsOpen, w, d)});
}

PsiTable psi_leaf_table(int dim)
{
    PsiTable t(dim);
    for (int w = 0; w < dim; ++w)
        t.set(PsiTable::Empty, w, w, 0);
    return t;
}

namespace {

struct Parity {
    bool touches_root;
    int odd_others; // odd-degree vertices of the walk other than the root
    int root_odd;
};

constexpr Parity kParity[PsiTable::kClasses] = {
    {false, 0, 0}, // Empty
    {true, 0, 0},  // Closed
    {true, 1, 1},  // EndsAtRoot
    {true, 2, 0},  // Passes
    {false, 0, 0}, // Avoids
    {false, 2, 0}, // AvoidsOpen
};

bool avoids(int cls)
{
    return cls == PsiTable::Avoids || cls == PsiTable::AvoidsOpen;
}

// Class of the union when the parent part has class a, the child part class b,
// and the joining edge is used t times; nullopt if the union is not a walk.
std::optional<int> joined_class(int a, int b, int t)
{
    if (t == 0) {
        if (b == PsiTable::Empty)
            return a;
        if (a != PsiTable::Empty)
            return std::nullopt; // two pieces with nothing joining them
        int odd = kParity[b].odd_others + kParity[b].root_odd;
        return odd == 0 ? PsiTable::Avoids : PsiTable::AvoidsOpen;
    }
    if (avoids(a) || avoids(b))
        return std::nullopt;
    const int flip = t & 1;
    int root_odd = kParity[a].root_odd ^ flip;
    int others = kParity[a].odd_others + kParity[b].odd_others + (kParity[b].root_odd ^ flip);
    if (others + root_odd > 2)
        return std::nullopt;
    if (others == 0)
        return PsiTable::Closed;
    if (others == 1)
        return PsiTable::EndsAtRoot;
    return PsiTable::Passes;
}

} // namespace

PsiTable combine_tables(const PsiTable& parent, const PsiTable& child, int edge_cap)
{
    if (edge_cap < 0 || child.dim() < edge_cap + 2)
        throw Error(ErrorCode::DimensionMismatch,
                    "child table of size " + std::to_string(child.dim()) + " cannot absorb edge cap " +
                        std::to_string(edge_cap));
    constexpr int inf = PsiTable::kInfinite;
    const int K = edge_cap;

    // Two best child degrees per (t, class) so that one differs from any d.
    struct Best {
        int cost = inf;
        int d = -1;
    };
    std::vector<std::array<std::array<Best, 2>, PsiTable::kClasses>> best(K + 1);
    for (int t = 0; t <= K; ++t)
        for (int b = 0; b < PsiTable::kClasses; ++b) {
            auto& pair = best[t][b];
            for (int dd = 0; dd < child.dim(); ++dd) {
                int c = child.cost(b, 1 + t, dd);
                if (c >= inf)
                    continue;
                if (c < pair[0].cost) {
                    pair[1] = pair[0];
                    pair[0] = {c, dd};
                } else if (c < pair[1].cost) {
                    pair[1] = {c, dd};
                }
            }
        }

    const int D = parent.dim();
    PsiTable out(D);
    for (int w = 0; w < D; ++w)
        for (int d = w; d < D; ++d)
            for (int t = 0; t <= K; ++t) {
                const int wp = w + 1 + t;
                if (wp > d)
                    break;
                for (int a = 0; a < PsiTable::kClasses; ++a) {
                    int ca = parent.cost(a, wp, d);
                    if (ca >= inf)
                        continue;
                    for (int b = 0; b < PsiTable::kClasses; ++b) {
                        const auto& pair = best[t][b];
                        const Best& pick = pair[0].d != d ? pair[0] : pair[1];
                        if (pick.cost >= inf)
                            continue;
                        auto cls = joined_class(a, b, t);
                        if (!cls)
                            continue;
                        int total = ca + pick.cost + t;
                        if (total < out.cost(*cls, w, d))
                            out.set(*cls, w, d, total, {t, a, b, pick.d});
                    }
                }
            }
    return out;
}

namespace {

class TreeSolver {
public:
    TreeSolver(const RootedTree& t, int slack) : t_(t), g_(t.graph), partial_(g_.order())
    {
        dims_.resize(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) {
            int d = g_.degree(v);
            for (Vertex u : g_.neighbours(v))
                d += cap(v, u);
            dims_[v] = d + 1 + slack;
        }
    }

    ExactResult solve()
    {
        // children before parents
        std::vector<Vertex> order{t_.root};
        for (std::size_t h = 0; h < order.size(); ++h)
            for (Vertex c : t_.children[order[h]])
                order.push_back(c);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex v = *it;
            partial_[v].push_back(psi_leaf_table(dims_[v]));
            for (Vertex c : t_.children[v])
                partial_[v].push_back(combine_tables(partial_[v].back(), partial_[c].back(), cap(v, c)));
        }

        const PsiTable& top = partial_[t_.root].back();
        int best = PsiTable::kInfinite, best_d = -1, best_cls = -1;
        for (int d = 0; d < top.dim(); ++d)
            for (int cls = 0; cls < PsiTable::kClasses; ++cls)
                if (top.cost(cls, 0, d) < best) {
                    best = top.cost(cls, 0, d);
                    best_d = d;
                    best_cls = cls;
                }
        if (best >= PsiTable::kInfinite)
            return ExactResult::infinite();

        counts_.assign(g_.size(), 0);
        replay(t_.root, static_cast<int>(t_.children[t_.root].size()), best_cls, 0, best_d);

        ExactResult r;
        r.kind = ExactResult::Kind::Finite;
        r.value = best;
        r.witness = realize_multiset(g_, counts_);
        r.multiset = counts_;
        return r;
    }

private:
    int cap(Vertex a, Vertex b) const { return 2 * (g_.degree(a) + g_.degree(b) - 1); }

    void replay(Vertex v, int step, int cls, int w, int d)
    {
        while (step > 0) {
            const auto& ch = partial_[v][step].choice(cls, w, d);
            Vertex c = t_.children[v][step - 1];
            counts_[g_.edge_id(v, c)] = ch.t;
            replay(c, static_cast<int>(t_.children[c].size()), ch.child_class, 1 + ch.t, ch.child_degree);
            cls = ch.parent_class;
            w = w + 1 + ch.t;
            --step;
        }
    }

    const RootedTree& t_;
    const Graph& g_;
    std::vector<int> dims_;
    std::vector<std::vector<PsiTable>> partial_;
    std::vector<int> counts_;
};

} // namespace

ExactResult tree_mlw(const RootedTree& t, int slack)
{
    const Graph& g = t.graph;
    if (g.order() == 0 || g.size() != g.order() - 1 || !is_connected(g))
        throw Error(ErrorCode::NotATree, "graph is not a tree");
    if (!is_nice(g))
        throw Error(ErrorCode::NotNice, "tree must have at least three vertices");
    return TreeSolver(t, slack).solve();
}

} // namespace irregwalk
