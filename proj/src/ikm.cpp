#include "ikmp/ikm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ikmp/matching.hpp"

namespace ikmp {

int IntegerKMatching::total() const { return std::accumulate(values.begin(), values.end(), 0); }

std::string to_string(IkmKind kind) {
    switch (kind) {
        case IkmKind::perfect: return "perfect";
        case IkmKind::almost_perfect: return "almost_perfect";
        case IkmKind::neither: return "neither";
    }
    return "neither";
}

IkmClass verify(const Graph& g, const IntegerKMatching& m) {
    if (m.k < 1) throw InputError("k must be at least 1");
    if (static_cast<int>(m.values.size()) != g.size())
        throw InputError("assignment covers " + std::to_string(m.values.size()) + " edges, graph has " +
                         std::to_string(g.size()));
    std::vector<int> sum(g.order(), 0);
    for (int j = 0; j < g.size(); ++j) {
        const auto& e = g.edges()[j];
        int h = m.values[j];
        if (h < 0 || h > m.k)
            throw ConstraintViolation("edge " + std::to_string(g.label(e.u)) + "-" +
                                      std::to_string(g.label(e.v)) + " has value " + std::to_string(h) +
                                      " outside 0.." + std::to_string(m.k));
        sum[e.u] += h;
        sum[e.v] += h;
    }
    int short_by_one = 0;
    int full = 0;
    Vertex deficient = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (sum[v] > m.k)
            throw ConstraintViolation("vertex " + std::to_string(g.label(v)) + " has sum " +
                                      std::to_string(sum[v]) + " > " + std::to_string(m.k));
        if (sum[v] == m.k) ++full;
        else if (sum[v] == m.k - 1) {
            ++short_by_one;
            deficient = v;
        }
    }
    IkmClass c;
    if (full == g.order()) c.kind = IkmKind::perfect;
    else if (short_by_one == 1 && full == g.order() - 1) {
        c.kind = IkmKind::almost_perfect;
        c.deficient_vertex = g.label(deficient);
    }
    return c;
}

GadgetGraph build_gadget(const Graph& g, int k, std::optional<Vertex> deficient) {
    if (k < 1) throw InputError("k must be at least 1");
    if (deficient && (*deficient < 0 || *deficient >= g.order())) throw InputError("deficient vertex out of range");

    GadgetGraph out;
    out.k = k;
    out.b.assign(g.order(), k);
    if (deficient) out.b[*deficient] = k - 1;

    Vertex next = 0;
    out.vertex_copies.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        for (int c = 0; c < out.b[v]; ++c) out.vertex_copies[v].push_back(next++);

    const Vertex copies_end = next;
    out.adjacency.resize(copies_end + 2 * static_cast<std::size_t>(k) * g.size());
    out.edge_gadgets.resize(g.size());
    for (int j = 0; j < g.size(); ++j) {
        const auto& e = g.edges()[j];
        for (int i = 0; i < k; ++i) {
            Vertex x = next++, y = next++;
            out.edge_gadgets[j].emplace_back(x, y);
            out.adjacency[x].push_back(y);
            out.adjacency[y].push_back(x);
            for (Vertex c : out.vertex_copies[e.u]) {
                out.adjacency[x].push_back(c);
                out.adjacency[c].push_back(x);
            }
            for (Vertex c : out.vertex_copies[e.v]) {
                out.adjacency[y].push_back(c);
                out.adjacency[c].push_back(y);
            }
        }
    }
    for (auto& nbrs : out.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

Graph GadgetGraph::graph() const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < order(); ++v)
        for (Vertex w : adjacency[v])
            if (v < w) edges.push_back({v, w});
    return Graph(order(), edges);
}

namespace {

struct GadgetSolution {
    GadgetGraph gadget;
    std::vector<Vertex> mate;
    int matched = 0;  // nu(gadget)

    int unmatched() const { return gadget.order() - 2 * matched; }
};

// Seeds the gadget matching with every gadget pair matched to itself, then
// lifts `seed` (a matching of g) by routing min(b(u), b(w)) units over each
// seed edge. Growing this to a maximum matching needs few augmentations.
GadgetSolution solve_gadget(const Graph& g, int k, const Matching& seed) {
    GadgetSolution sol{build_gadget(g, k), {}, 0};
    auto& mate = sol.mate;
    const auto& gad = sol.gadget;
    mate.assign(gad.order(), kUnmatched);
    for (const auto& pairs : gad.edge_gadgets)
        for (auto [x, y] : pairs) {
            mate[x] = y;
            mate[y] = x;
        }
    for (const auto& e : seed.pairs) {
        int j = g.edge_index(e.u, e.v);
        const auto& cu = gad.vertex_copies[e.u];
        const auto& cw = gad.vertex_copies[e.v];
        const auto units = std::min(cu.size(), cw.size());
        for (std::size_t i = 0; i < units; ++i) {
            auto [x, y] = gad.edge_gadgets[j][i];
            mate[x] = cu[i];
            mate[cu[i]] = x;
            mate[y] = cw[i];
            mate[cw[i]] = y;
        }
    }
    sol.matched = grow_to_maximum(gad.adjacency, mate);
    return sol;
}

GadgetSolution solve_gadget(const Graph& g, int k) { return solve_gadget(g, k, max_matching(g)); }

Vertex copies_end(const GadgetGraph& gad) {
    return static_cast<Vertex>(std::accumulate(gad.b.begin(), gad.b.end(), 0));
}

// Moves a lone unmatched gadget-pair vertex onto a vertex copy: its partner
// is matched to some copy c, so matching the pair to itself frees c instead.
void normalize_unmatched(GadgetSolution& sol) {
    const Vertex first_gadget = copies_end(sol.gadget);
    for (Vertex v = first_gadget; v < sol.gadget.order(); ++v) {
        if (sol.mate[v] != kUnmatched) continue;
        Vertex partner = first_gadget + ((v - first_gadget) ^ 1);
        Vertex c = sol.mate[partner];
        if (c != kUnmatched) sol.mate[c] = kUnmatched;
        sol.mate[partner] = v;
        sol.mate[v] = partner;
    }
}

IntegerKMatching recover(const Graph& g, const GadgetSolution& sol) {
    IntegerKMatching m;
    m.k = sol.gadget.k;
    m.values.assign(g.size(), 0);
    for (int j = 0; j < g.size(); ++j)
        for (auto [x, y] : sol.gadget.edge_gadgets[j])
            if (sol.mate[x] != kUnmatched && sol.mate[x] != y && sol.mate[y] != kUnmatched) ++m.values[j];
    return m;
}

bool odd_product(int k, int n) { return (static_cast<long long>(k) * n) % 2 != 0; }

}  // namespace

Decision decide_perfect_ikm(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    Decision d;
    if (odd_product(k, g.order())) return d;

    auto pm = max_matching(g);
    if (2 * pm.size() == g.order()) {
        IntegerKMatching m{k, std::vector<int>(g.size(), 0)};
        for (const auto& e : pm.pairs) m.values[g.edge_index(e.u, e.v)] = k;
        d.exists = true;
        d.assignment = std::move(m);
        return d;
    }
    auto sol = solve_gadget(g, k, pm);
    if (sol.unmatched() == 0) {
        d.exists = true;
        d.assignment = recover(g, sol);
    }
    return d;
}

Decision decide_almost_perfect_ikm(const Graph& g, int k, bool attach_certificate) {
    if (k < 1) throw InputError("k must be at least 1");
    Decision d;
    if (odd_product(k, g.order())) {
        auto sol = solve_gadget(g, k);
        if (sol.unmatched() == 1) {
            normalize_unmatched(sol);
            d.exists = true;
            d.assignment = recover(g, sol);
            return d;
        }
    }
    if (attach_certificate) d.certificate = lemma41_certificate(g, k);
    return d;
}

bool admits_near_perfect_ikm(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    const int n = g.order();
    if (n == 0) return true;
    auto pm = max_matching(g);
    const int missed = n - 2 * pm.size();
    if (k == 1) return missed <= 1;
    // an isolated vertex has sum 0, never k nor k-1 when k >= 2
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) return false;
    if (missed == 0) return true;
    auto sol = solve_gadget(g, k, pm);
    return sol.unmatched() == (odd_product(k, n) ? 1 : 0);
}

IntegerKMatching max_ikm(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    auto sol = solve_gadget(g, k);
    return recover(g, sol);
}

int mu_k(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    auto sol = solve_gadget(g, k);
    return sol.matched - k * g.size();
}

std::optional<Lemma41Certificate> lemma41_certificate(const Graph& g, int k, CertificateBudget budget) {
    if (k < 1) throw InputError("k must be at least 1");
    const int n = g.order();
    const int max_size = std::min(n, budget.max_size.value_or(n <= 20 ? n : 4));

    std::vector<char> removed(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    auto evaluate = [&](int s_size) -> std::optional<Lemma41Certificate> {
        std::fill(seen.begin(), seen.end(), 0);
        int odd = 0, isolated = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (removed[s] || seen[s]) continue;
            int order = 0;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                ++order;
                for (Vertex w : g.neighbors(v))
                    if (!removed[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (order == 1) ++isolated;
            else if (order % 2 == 1) ++odd;
        }
        long long slack = static_cast<long long>(k) * s_size + 1 - odd - static_cast<long long>(k) * isolated;
        if (slack >= 0) return std::nullopt;
        Lemma41Certificate c;
        for (Vertex v = 0; v < n; ++v)
            if (removed[v]) c.s.push_back(g.label(v));
        c.odd_count = odd;
        c.isolated_count = isolated;
        c.slack = slack;
        return c;
    };

    std::vector<Vertex> combo;
    for (int size = 0; size <= max_size; ++size) {
        combo.resize(size);
        std::iota(combo.begin(), combo.end(), 0);
        for (;;) {
            std::fill(removed.begin(), removed.end(), 0);
            for (Vertex v : combo) removed[v] = 1;
            if (auto c = evaluate(size)) return c;
            int i = size - 1;
            while (i >= 0 && combo[i] == n - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

// Biconnected components as edge lists (Hopcroft-Tarjan with an edge stack).
std::vector<std::vector<Edge>> blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> out;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        for (Vertex w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                edge_stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<Edge> block;
                    for (;;) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e.u == v && e.v == w) break;
                    }
                    out.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return out;
}

}  // namespace

bool is_odd_cycle_tree(const Graph& h) {
    if (h.order() == 0 || components(h).components.size() != 1)
        throw InputError("odd-cycle-tree recognizer needs a connected graph");
    if (min_degree(h) < 2) return false;

    std::vector<int> cycles_at(h.order(), 0);
    for (const auto& block : blocks(h)) {
        if (block.size() == 1) continue;
        std::vector<Vertex> verts;
        for (const auto& e : block) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        // a biconnected block with |E| = |V| is a cycle
        if (verts.size() != block.size() || verts.size() % 2 == 0) return false;
        for (Vertex v : verts)
            if (++cycles_at[v] > 1) return false;
    }
    return true;
}

SupportReport support_structure(const Graph& g, const IntegerKMatching& m) {
    verify(g, m);
    std::vector<Edge> dropped;
    for (int j = 0; j < g.size(); ++j)
        if (m.values[j] == 0) dropped.push_back({g.label(g.edges()[j].u), g.label(g.edges()[j].v)});
    Graph support = delete_faults(g, FaultSet({}, std::move(dropped)));

    SupportReport report;
    for (const auto& comp : components(support).components) {
        if (comp.size() == 1) continue;
        std::vector<Vertex> idx;
        for (Vertex label : comp) idx.push_back(support.index_of(label));
        Graph part = induced_subgraph(support, idx);
        SupportComponent sc;
        sc.vertices = comp;
        sc.edges = part.size();
        if (part.size() == 1) sc.kind = SupportKind::single_edge;
        else if (is_odd_cycle_tree(part)) sc.kind = SupportKind::odd_cycle_tree;
        else report.well_formed = false;
        report.components.push_back(std::move(sc));
    }
    return report;
}

}  // namespace ikmp
