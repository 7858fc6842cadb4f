// matching.hpp
//
// Maximum cardinality matching in general graphs (Edmonds' blossom
// algorithm) and the perfect fractional matching test.

#pragma once

#include <span>
#include <vector>

#include "ikmp/graph.hpp"

namespace ikmp {

inline constexpr Vertex kUnmatched = -1;

/// Maximum matching over a raw adjacency structure. `mate` may carry a valid
/// starting matching (kUnmatched for free vertices); it is grown in place to
/// a maximum one. Free roots are processed in increasing index order and
/// neighbors in adjacency order, so the result is deterministic.
/// Returns the matching size.
int grow_to_maximum(std::span<const std::vector<Vertex>> adjacency, std::vector<Vertex>& mate);

struct Matching {
    /// Matched edges (dense indices, u < v), sorted.
    std::vector<Edge> pairs;
    /// mate[v] or kUnmatched.
    std::vector<Vertex> mate;

    int size() const { return static_cast<int>(pairs.size()); }
};

struct Deficiency {
    int value = 0;                  // |V| - 2 mu(G)
    std::vector<Vertex> unmatched;  // labels
};

Matching max_matching(const Graph& g);
Deficiency deficiency(const Graph& g);

bool has_perfect_matching(const Graph& g);
bool has_almost_perfect_matching(const Graph& g);

/// True iff weights in [0,1] with every vertex sum exactly 1 exist. Decided
/// as a perfect matching test on the bipartite double cover.
bool has_perfect_fractional_matching(const Graph& g);

}  // namespace ikmp
