// generators.hpp
//
// Named graph families: complete, path, cycle, bipartite, random, and the
// arrangement graphs A(n,s).

#pragma once

#include <cstdint>
#include <vector>

#include "ikmp/graph.hpp"

namespace ikmp {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// Each of the a*b cross pairs kept with probability p. Deterministic per seed.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);
/// G(n,p). Deterministic per seed.
Graph random_graph(int n, double p, std::uint64_t seed);

struct ArrangementSpec {
    int n = 0;
    int s = 0;
};

/// A(n,s): vertices are injective s-tuples over {1..n}, ordered
/// lexicographically; adjacent iff the tuples differ in exactly one position.
struct ArrangementGraph {
    ArrangementSpec spec;
    Graph graph;
    std::vector<std::vector<int>> labels;  // tuple of vertex i
    /// blocks[i-1] lists the vertices whose last coordinate is i.
    std::vector<std::vector<Vertex>> blocks;

    /// 1-based block id (last coordinate) of v.
    int block_of(Vertex v) const { return labels[v].back(); }
};

ArrangementGraph arrangement(ArrangementSpec spec);

}  // namespace ikmp
