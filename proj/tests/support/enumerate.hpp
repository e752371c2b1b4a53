#pragma once

#include <vector>

#include <irregwalk/graph.hpp>

namespace enumerate {

// Every free tree on n vertices, one per isomorphism class.
std::vector<irregwalk::Graph> free_trees(int n);

// Every connected graph on n <= 7 vertices, one per isomorphism class.
std::vector<irregwalk::Graph> connected_graphs(int n);

} // namespace enumerate
