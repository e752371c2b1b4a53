#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "irregwalk/graph.hpp"

namespace irregwalk {

/// A vertex sequence; the empty walk and a single vertex both have length 0.
struct Walk {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size() < 2 ? 0 : vertices.size() - 1; }
    bool empty() const noexcept { return vertices.empty(); }
    bool is_closed() const noexcept { return !vertices.empty() && vertices.front() == vertices.back(); }
    Walk reversed() const;

    friend bool operator==(const Walk&, const Walk&) = default;
};

/// Multiplicity of each unordered vertex pair.
class EdgeMultiset {
public:
    EdgeMultiset() = default;

    static EdgeMultiset of_walk(const Walk& w);

    void add(Edge e, int times = 1);
    int count(Edge e) const;
    int total() const noexcept { return total_; }
    const std::map<Edge, int>& counts() const noexcept { return counts_; }

    /// Counts indexed by g's edge ids. Throws InvalidWalk on a pair that is not an edge of g.
    std::vector<int> by_edge_id(const Graph& g) const;

    friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;

private:
    std::map<Edge, int> counts_;
    int total_ = 0;
};

struct DegreeProfile {
    std::vector<int> degrees;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Every consecutive pair is an edge of g (and every vertex is in range).
bool validate_walk(const Graph& g, const Walk& w);

/// Degrees of G+W. Throws InvalidWalk.
DegreeProfile degree_profile(const Graph& g, const Walk& w);

/// Degrees of G+F for a multiset given as per-edge-id counts.
DegreeProfile degree_profile(const Graph& g, std::span<const int> edge_counts);

/// Per-edge-id traversal counts of w. Throws InvalidWalk.
std::vector<int> edge_counts(const Graph& g, const Walk& w);

/**
   Turns a multiset (per-edge-id counts) into a walk with exactly that edge
   multiset, when one exists: the support must be connected and have zero or
   two odd-degree vertices. Hierholzer's algorithm; the walk starts at the
   smaller odd vertex, or at the smallest support vertex when all are even.
 */
std::optional<Walk> realize_multiset(const Graph& g, std::span<const int> edge_counts);

} // namespace irregwalk
