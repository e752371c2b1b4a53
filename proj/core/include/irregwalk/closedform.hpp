#pragma once

#include <vector>

#include "irregwalk/graph.hpp"
#include "irregwalk/walk.hpp"

namespace irregwalk {

/// Optimal length with a witness of exactly that length (empty when the value is 0).
struct ClosedFormAnswer {
    int value = 0;
    Walk witness;
};

/// K_n on vertices 0..n-1. Throws OrderTooSmall for n < 3.
ClosedFormAnswer mlw_complete(int n);

/// K_{a,b}: side A is 0..a-1, side B is a..a+b-1. Throws OrderTooSmall unless a, b >= 1 and a + b >= 3.
ClosedFormAnswer mlw_complete_bipartite(int a, int b);

/// Path of length n on vertices 0..n. Throws OrderTooSmall for n < 2.
ClosedFormAnswer mlw_path(int n);

/// Cycle 0-1-..-(n-1)-0. Throws OrderTooSmall for n < 3.
ClosedFormAnswer mlw_cycle(int n);

/// Smallest irregularising multiset size of the path of length n. Throws OrderTooSmall.
int phi_path(int n);

/// A multiset of that size: edges u_{4i+2}u_{4i+3} and u_{4i+3}u_{4i+4}, indexed by k for edge u_k u_{k+1}.
std::vector<int> phi_path_multiset(int n);

} // namespace irregwalk
