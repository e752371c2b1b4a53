#pragma once

#include <array>
#include <limits>
#include <vector>

#include "irregwalk/exact.hpp"
#include "irregwalk/graph.hpp"

namespace irregwalk {

struct RootedTree {
    Graph graph;
    Vertex root = 0;
    std::vector<Vertex> parent;                // -1 at the root
    std::vector<std::vector<Vertex>> children; // ascending

    /// Throws NotATree.
    static RootedTree from_graph(const Graph& g, Vertex root);
};

/**
   Walk shapes relative to the root r, each class containing the previous:
   Zero   - the empty walk;
   InOut  - closed walks through r (the empty walk counts);
   In     - walks starting at r;
   Root   - walks through r;
   Any    - all walks.
 */
enum class Shape { Zero, InOut, In, Root, Any };

/**
   Minimum lengths of walks W of a rooted tree T such that the root, with
   w extra outside edges, has degree d = d_{T+W}(r) + w and differs from
   its children in T+W. Indexed by shape, w and d, both in 0..dim-1.

   Internally the table keeps six disjoint classes that the combination
   step needs; the shapes above are minima over unions of them.
 */
class PsiTable {
public:
    static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

    enum Class { Empty, Closed, EndsAtRoot, Passes, Avoids, AvoidsOpen, kClasses };

    struct Choice {
        int t = -1;    // multiplicity of the new edge to the child root
        int parent_class = 0;
        int child_class = 0;
        int child_degree = 0;
    };

    explicit PsiTable(int dim);

    int dim() const noexcept { return dim_; }
    int psi(Shape s, int w, int d) const;

    int cost(int cls, int w, int d) const { return cost_[index(cls, w, d)]; }
    const Choice& choice(int cls, int w, int d) const { return choice_[index(cls, w, d)]; }

    void set(int cls, int w, int d, int value) { set(cls, w, d, value, Choice{}); }
    void set(int cls, int w, int d, int value, Choice c)
    {
        cost_[index(cls, w, d)] = value;
        choice_[index(cls, w, d)] = c;
    }

private:
    std::size_t index(int cls, int w, int d) const
    {
        return (static_cast<std::size_t>(cls) * dim_ + w) * dim_ + d;
    }

    int dim_;
    std::vector<int> cost_;
    std::vector<Choice> choice_;
};

/// Single-vertex tree: only the empty walk, at d = w.
PsiTable psi_leaf_table(int dim);

/**
   Table of T'↑T'' from the table of T' (root r) and the full table of T''
   (root r''), joined by the edge r r'' used at most edge_cap times.
   Throws DimensionMismatch when the child table cannot be read at weight
   edge_cap + 1.
 */
PsiTable combine_tables(const PsiTable& parent, const PsiTable& child, int edge_cap);

/**
   Exact minimum irregularising walk length of a tree by the table
   recurrence; the witness comes from replaying the stored choices.
   `slack` widens every table beyond the proven degree cap.
   Throws NotNice, NotATree.
 */
ExactResult tree_mlw(const RootedTree& t, int slack = 0);

} // namespace irregwalk
