#pragma once

#include <cstdint>
#include <random>

#include "irregwalk/graph.hpp"

namespace irregwalk {

using Rng = std::mt19937_64;

/// Path of length n: vertices 0..n.
Graph make_path(int n);
/// Cycle of length n >= 3.
Graph make_cycle(int n);
Graph make_complete(int n);
/// Side A = 0..a-1, side B = a..a+b-1.
Graph make_complete_bipartite(int a, int b);
/// Centre 0 with k leaves.
Graph make_star(int k);
/// Centre 0 and k branches of length l; branch r holds 1+r*l .. (r+1)*l, outward.
Graph make_subdivided_star(int k, int l);
/// d-dimensional cube on 2^d vertices.
Graph make_hypercube(int d);

/// Uniform labelled tree on n vertices (Pruefer decoding).
Graph random_tree(int n, Rng& rng);
/// G(n, p) resampled until connected.
Graph random_connected_graph(int n, double p, Rng& rng);
/**
   Cubic bipartite graph on 2s vertices (s >= 3): the Hamiltonian cycle
   0,1,..,2s-1 plus a random perfect matching between even and odd vertices
   avoiding cycle edges.
 */
Graph random_cubic_bipartite(int s, Rng& rng);

} // namespace irregwalk
