#pragma once

#include <optional>
#include <vector>

#include "irregwalk/graph.hpp"
#include "irregwalk/walk.hpp"

namespace irregwalk {

struct ExactResult {
    enum class Kind { Finite, Infinite, Exhausted };

    Kind kind = Kind::Infinite;
    /// The optimum when Finite; the budget that ran out when Exhausted.
    int value = 0;
    std::optional<Walk> witness;
    /// Per-edge-id counts of the optimal multiset (set by the multiset searches).
    std::optional<std::vector<int>> multiset;

    bool finite() const noexcept { return kind == Kind::Finite; }

    static ExactResult infinite() { return {}; }
    static ExactResult exhausted(int budget) { return {Kind::Exhausted, budget, {}, {}}; }
};

/// 2(m + n - 1): every nice graph has an irregularising walk this short.
int default_walk_budget(const Graph& g);

/// 2(d(x) + d(y) - 1): more traversals of xy than this never help.
int traversal_cap(const Graph& g, int edge_id);

/**
   Minimum irregularising walk length by iterative deepening over all walks,
   start vertices and neighbours in ascending order. The witness is the
   lexicographically smallest optimal walk. `threads` > 1 splits each depth
   by start vertex; the result is identical to the sequential one.
   Infinite on non-nice input, NotNice error when n <= 1.
 */
ExactResult exact_mlw(const Graph& g, std::optional<int> budget = std::nullopt, int threads = 1);

/**
   Same optimum computed over edge multiplicities instead of walks: a
   multiset is a walk iff its support is connected and has at most two
   odd-degree vertices. Much faster on sparse graphs with long optima.
 */
ExactResult exact_mlw_multiset(const Graph& g, std::optional<int> budget = std::nullopt);

/// Smallest k <= cap such that an irregularising walk traverses no edge more than k times.
ExactResult exact_mew(const Graph& g, int cap);

/// Smallest k <= cap such that an irregularising walk puts at most k walk edges on any vertex.
ExactResult exact_mvw(const Graph& g, int cap);

/// Shortest irregularising path or cycle; 0 with an empty witness when g is already irregular.
ExactResult exists_irregularising_path(const Graph& g);

/// Smallest irregularising edge multiset, no walk constraint.
ExactResult exact_phi(const Graph& g, std::optional<int> budget = std::nullopt);

} // namespace irregwalk
