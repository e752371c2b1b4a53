#pragma once

#include <optional>
#include <vector>

#include "irregwalk/graph.hpp"
#include "irregwalk/walk.hpp"

namespace irregwalk {

enum class Side { U, V };

/**
   Reduction output. Vertex i of h keeps index i in g; the attached
   structure follows in H order (per vertex: a_x, then its raised
   neighbours for the path gadget, then b_x likewise, then c_x), and all
   plain leaves come last, grouped by the vertex they hang from in that
   same order.
 */
struct GadgetInstance {
    Graph g;
    std::optional<int> k;
    std::vector<Vertex> h_vertices; // h vertex i -> vertex of g
    std::vector<Side> side;          // per h vertex
};

/// BFS 2-colouring from vertex 0 (side U). Throws NotBipartite.
std::vector<Side> bipartition(const Graph& h);

/// Throws NotCubic, NotBipartite, NotConnected.
GadgetInstance build_walk_gadget(const Graph& h);
GadgetInstance build_path_gadget(const Graph& h);

/// Hamiltonian cycle as a closed walk starting and ending at 0, or nullopt.
std::optional<Walk> hamiltonian_cycle(const Graph& h);

/// A closed walk of h mapped into the gadget.
Walk lift_walk(const GadgetInstance& gi, const Walk& w);

} // namespace irregwalk
