#pragma once

#include <vector>

#include "irregwalk/graph.hpp"
#include "irregwalk/walk.hpp"

namespace irregwalk {

struct ConflictReport {
    /// Edges whose endpoints share a degree in G+W, sorted.
    std::vector<Edge> conflicts;

    bool irregularising() const noexcept { return conflicts.empty(); }
};

/// Throws InvalidWalk.
ConflictReport check_irregularising(const Graph& g, const Walk& w);
ConflictReport check_profile(const Graph& g, const DegreeProfile& p);

/**
   A walk written as a base walk S plus half-turns: the expansion is
   s0 (s1 s0)^{h0} s1 (s2 s1)^{h1} s2 ... so half_turns has one entry per
   edge of S. e_odd / e_even list the edges traversed an odd / nonzero even
   number of times by the expansion.
 */
struct NormalForm {
    Walk base;
    std::vector<int> half_turns;
    std::vector<Edge> e_odd;
    std::vector<Edge> e_even;
};

Walk expand_normal_form(const NormalForm& nf);

/**
   Gathers the traversals of every edge (ascending edge order) so that the
   result follows a base walk using each odd edge once and each even edge at
   most twice. Throws InvalidWalk, EmptyWalk.
 */
NormalForm normalize_walk(const Graph& g, const Walk& w);

/**
   Walk on the path u_0..u_n in the shape
   S = u_i u_{i-1} .. u_m u_{m+1} .. u_M u_{M-1} .. u_j, m <= i <= j <= M.
   t[k] counts traversals of u_k u_{k+1}. `reversed` is set when the input
   had to be reversed to get i <= j.
 */
struct PathNormalForm {
    int m = 0;
    int i = 0;
    int j = 0;
    int M = 0;
    std::vector<int> t;
    bool reversed = false;
    NormalForm form;
};

/// Throws InvalidWalk, EmptyWalk.
PathNormalForm normalize_path_walk(int path_length, const Walk& w);

} // namespace irregwalk
