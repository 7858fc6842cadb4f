// graph.hpp
//
// Immutable simple undirected graph with stable vertex labels, fault sets
// and the component counts used by deficiency arguments.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ikmp {

using Vertex = int;

/// Raised on malformed input: unknown vertices, bad parameters, parse errors.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Returns the edge with endpoints ordered u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A set of vertices and edges to delete, addressed by vertex label.
/// Both containers are kept sorted and duplicate-free.
class FaultSet {
public:
    FaultSet() = default;
    FaultSet(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size() + edges_.size(); }
    bool empty() const { return size() == 0; }

    friend bool operator==(const FaultSet&, const FaultSet&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

/// Undirected simple graph. Vertices are stored at dense indices 0..n-1;
/// each index carries a label (its id in the graph it was derived from).
/// Freshly built graphs have label(i) == i. Edge endpoints, adjacency and
/// all index-taking accessors use dense indices; FaultSet uses labels.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices 0..n-1. Throws InputError on self-loops,
    /// duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    /// Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted neighbor indices of v.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(Vertex a, Vertex b) const;
    /// Position of edge {a,b} in edges(), or -1.
    int edge_index(Vertex a, Vertex b) const;

    Vertex label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
    /// Dense index of a label, or -1 when the label is absent.
    Vertex index_of(Vertex label) const;
    bool identity_labels() const { return labels_.empty(); }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend Graph delete_faults(const Graph& g, const FaultSet& f);

    static std::uint64_t key(Vertex a, Vertex b) {
        auto e = make_edge(a, b);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
               static_cast<std::uint32_t>(e.v);
    }

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::vector<Vertex> labels_;  // empty means identity
};

struct ComponentReport {
    /// Components as label lists, each sorted; ordered by smallest label.
    std::vector<std::vector<Vertex>> components;
    int isolated_count = 0;        // i(G)
    int odd_nontrivial_count = 0;  // odd(G): odd components of order >= 3
    int odd_total = 0;             // c_o(G)
};

/// G - F. Remaining vertices keep their labels. Throws InputError if F
/// names a vertex or edge not present in g.
Graph delete_faults(const Graph& g, const FaultSet& f);

/// Subgraph induced by the given dense indices (labels are carried over).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

ComponentReport components(const Graph& g);

/// Minimum degree. Throws InputError on the graph with no vertices.
int min_degree(const Graph& g);

/// BFS 2-coloring.
bool is_bipartite(const Graph& g);

/// Checks that f only references elements of g.
void validate_faults(const Graph& g, const FaultSet& f);

}  // namespace ikmp
