#include "ikmp/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace ikmp {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

void require_probability(double p) { require(p >= 0.0 && p <= 1.0, "probability must lie in [0,1]"); }

}  // namespace

Graph complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    require(a >= 0 && b >= 0 && a + b >= 1, "complete bipartite graph needs a, b >= 0 and a + b >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
    return Graph(a + b, edges);
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
    require(a >= 0 && b >= 0, "part sizes must be non-negative");
    require_probability(p);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            if (coin(rng) < p || p == 1.0) edges.push_back({u, v});
    return Graph(a + b, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require(n >= 0, "vertex count must be non-negative");
    require_probability(p);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng) < p || p == 1.0) edges.push_back({u, v});
    return Graph(n, edges);
}

ArrangementGraph arrangement(ArrangementSpec spec) {
    require(spec.n >= 2 && spec.s >= 1 && spec.s <= spec.n - 1,
            "arrangement graph needs n >= 2 and 1 <= s <= n-1");
    const int n = spec.n, s = spec.s;

    ArrangementGraph out;
    out.spec = spec;

    // lexicographic enumeration of injective s-tuples over {1..n}
    std::vector<int> tuple;
    std::vector<char> used(n + 1, 0);
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == s) {
            out.labels.push_back(tuple);
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[x]) continue;
            used[x] = 1;
            tuple.push_back(x);
            self(self);
            tuple.pop_back();
            used[x] = 0;
        }
    };
    extend(extend);

    std::map<std::vector<int>, Vertex> id;
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v) id.emplace(out.labels[v], v);

    std::vector<Edge> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v) {
        const auto& t = out.labels[v];
        for (int pos = 0; pos < s; ++pos) {
            for (int x = 1; x <= n; ++x) {
                if (std::find(t.begin(), t.end(), x) != t.end()) continue;
                auto w = t;
                w[pos] = x;
                Vertex u = id.at(w);
                if (v < u) edges.push_back({v, u});
            }
        }
    }
    out.graph = Graph(static_cast<int>(out.labels.size()), edges);

    out.blocks.assign(n, {});
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v)
        out.blocks[out.labels[v].back() - 1].push_back(v);
    return out;
}

}  // namespace ikmp
