#pragma once

#include <compare>
#include <span>
#include <vector>

namespace irregwalk {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static constexpr Edge of(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

    constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/**
   Simple undirected graph on the dense vertex set 0..n-1.

   Adjacency lists are sorted. Edges carry a stable id: the position of the
   edge in the lexicographically sorted edge list, so per-edge data can live
   in plain vectors.
 */
class Graph {
public:
    Graph() = default;

    /// Throws Error{DuplicateEdge | SelfLoop | VertexOutOfRange}.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    /// Edge ids parallel to neighbours(v).
    std::span<const int> incident_edges(Vertex v) const { return incidence_[v]; }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }
    bool adjacent(Vertex a, Vertex b) const;
    /// -1 when a and b are not adjacent.
    int edge_id(Vertex a, Vertex b) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    std::vector<int> degrees() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<int>> incidence_;
    std::vector<Edge> edges_;
};

Graph build_graph(std::span<const Edge> edges, int n);

int max_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Connected, at least two vertices, and not K_2.
bool is_nice(const Graph& g);

/// No two adjacent vertices share a value in `degrees`.
bool is_locally_irregular(const Graph& g, std::span<const int> degrees);
bool is_locally_irregular(const Graph& g);

} // namespace irregwalk
