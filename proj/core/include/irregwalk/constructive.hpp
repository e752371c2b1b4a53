#pragma once

#include <vector>

#include "irregwalk/graph.hpp"
#include "irregwalk/walk.hpp"

namespace irregwalk {

/// Positive edge labels (indexed by edge id) with the per-vertex sums they induce.
struct ProperLabelling {
    std::vector<int> labels;
    std::vector<int> sums;

    int label_sum() const;
    int max_label() const;
    int max_vertex_sum() const;
};

/// Computes sums; throws ImproperLabelling when a label is < 1, the size is wrong, or two neighbours get equal sums.
ProperLabelling make_labelling(const Graph& g, std::vector<int> labels);
bool is_proper_labelling(const Graph& g, const std::vector<int>& labels);

/// 1 + traversal count on every edge: the labelling a walk induces.
ProperLabelling labelling_of_walk(const Graph& g, const Walk& w);

struct VertexColouring {
    std::vector<int> colours;
    int k = 0;
};

/// Throws ImproperColouring.
void check_colouring(const Graph& g, const VertexColouring& col);

/// Which certified construction produced a walk.
enum class Construction { GuideHalfTurns, ColourClasses, LabelledEulerTour };

struct BoundedWitness {
    Walk walk;
    int bound = 0;
    Construction construction = Construction::GuideHalfTurns;
};

/**
   Doubles a DFS spanning tree rooted at the lowest vertex of degree > 1
   (children in ascending order). Closed, spans all vertices, length 2(n-1).
   Throws NotConnected, NotNice (n < 2).
 */
Walk guiding_closed_walk(const Graph& g);

/**
   Follows a closed spanning guide u_0..u_p and, at the last visit of every
   vertex, adds the fewest half-turns along the next guide edge that set it
   apart from its already settled neighbours. u_p and a second neighbour v_2
   of u_0 are fixed at the end by half-turns along u_p v_2.
   Length <= p + 2m. Throws NotNice, BadGuide.
 */
BoundedWitness greedy_irregularise(const Graph& g, const Walk& guide);

/**
   Same sweep, but half-turns push each settled vertex's degree into the
   class of its colour: degrees 1,2 -> class 0, 3,4 -> class 1, ..., wrapping
   after k classes. The last two vertices are fixed by a back-and-forth walk.
   Length <= p + (n-1)(2k-2) + 2Δ. Throws NotNice, BadGuide, ImproperColouring.
 */
BoundedWitness chromatic_irregularise(const Graph& g, const Walk& guide, const VertexColouring& col);

/**
   Doubled Euler tour plus q(l(uv) - 1) half-turns on the second traversal
   of each edge, q = floor(3Δ/2). Every vertex ends with degree
   3d(u) + 2q(sigma(u) - d(u)). Throws NotNice, ImproperLabelling.
 */
BoundedWitness labelling_irregularise(const Graph& g, const ProperLabelling& lab);

/// Closed walk traversing every edge exactly twice. Throws NotConnected.
Walk doubled_euler_tour(const Graph& g);

/// Sequential greedy in ascending vertex order.
VertexColouring greedy_vertex_colouring(const Graph& g);

enum class LabellingObjective { MinSum, MinMaxLabel, MinMaxVertexSum };

/**
   Exhaustive branch and bound over labels 1..max_label; ties go to the
   lexicographically smallest labelling in edge-id order.
   Throws NotNice, NoLabellingWithinCap.
 */
ProperLabelling exact_proper_labelling(const Graph& g, LabellingObjective objective, int max_label = 3);

} // namespace irregwalk
