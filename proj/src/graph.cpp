#include "ikmp/graph.hpp"

#include <algorithm>
#include <queue>

namespace ikmp {

FaultSet::FaultSet(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.u, e.v);
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw InputError("negative vertex count");
    adjacency_.resize(n);
    edges_.reserve(edges.size());
    for (const auto& raw : edges) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(raw.u) + "-" +
                             std::to_string(raw.v));
        if (raw.u == raw.v) throw InputError("self-loop at vertex " + std::to_string(raw.u));
        auto e = make_edge(raw.u, raw.v);
        if (!edge_set_.insert(key(e.u, e.v)).second)
            throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    return edge_set_.contains(key(a, b));
}

int Graph::edge_index(Vertex a, Vertex b) const {
    if (!has_edge(a, b)) return -1;
    auto e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

Vertex Graph::index_of(Vertex label) const {
    if (labels_.empty()) return (label >= 0 && label < order()) ? label : -1;
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<Vertex>(it - labels_.begin());
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edges_ != b.edges_) return false;
    for (Vertex v = 0; v < a.order(); ++v)
        if (a.label(v) != b.label(v)) return false;
    return true;
}

void validate_faults(const Graph& g, const FaultSet& f) {
    for (Vertex x : f.vertices())
        if (g.index_of(x) < 0) throw InputError("fault set names unknown vertex " + std::to_string(x));
    for (const auto& e : f.edges()) {
        Vertex a = g.index_of(e.u), b = g.index_of(e.v);
        if (a < 0 || b < 0 || !g.has_edge(a, b))
            throw InputError("fault set names unknown edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v));
    }
}

Graph delete_faults(const Graph& g, const FaultSet& f) {
    validate_faults(g, f);
    const int n = g.order();
    std::vector<char> removed(n, 0);
    for (Vertex x : f.vertices()) removed[g.index_of(x)] = 1;

    std::vector<Vertex> new_index(n, -1);
    Graph out;
    std::vector<Vertex> labels;
    for (Vertex v = 0; v < n; ++v) {
        if (removed[v]) continue;
        new_index[v] = static_cast<Vertex>(labels.size());
        labels.push_back(g.label(v));
    }
    const int m = static_cast<int>(labels.size());
    out.adjacency_.resize(m);

    std::unordered_set<std::uint64_t> dropped;
    for (const auto& e : f.edges()) dropped.insert(Graph::key(g.index_of(e.u), g.index_of(e.v)));

    // edges_ stay sorted: new_index is monotone on surviving vertices
    for (const auto& e : g.edges()) {
        if (removed[e.u] || removed[e.v] || dropped.contains(Graph::key(e.u, e.v))) continue;
        Edge ne{new_index[e.u], new_index[e.v]};
        out.edges_.push_back(ne);
        out.edge_set_.insert(Graph::key(ne.u, ne.v));
        out.adjacency_[ne.u].push_back(ne.v);
        out.adjacency_[ne.v].push_back(ne.u);
    }
    for (auto& nbrs : out.adjacency_) std::sort(nbrs.begin(), nbrs.end());

    bool identity = true;
    for (Vertex i = 0; i < m; ++i) identity = identity && labels[i] == i;
    if (!identity) out.labels_ = std::move(labels);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> keep(g.order(), 0);
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order()) throw InputError("vertex index out of range");
        keep[v] = 1;
    }
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!keep[v]) drop.push_back(g.label(v));
    return delete_faults(g, FaultSet(std::move(drop), {}));
}

ComponentReport components(const Graph& g) {
    ComponentReport report;
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(g.label(v));
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        if (comp.size() == 1) ++report.isolated_count;
        else if (comp.size() % 2 == 1) ++report.odd_nontrivial_count;
        report.components.push_back(std::move(comp));
    }
    report.odd_total = report.isolated_count + report.odd_nontrivial_count;
    return report;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) throw InputError("minimum degree of the empty graph is undefined");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ikmp
