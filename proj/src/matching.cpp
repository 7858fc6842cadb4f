#include "ikmp/matching.hpp"

#include <algorithm>

namespace ikmp {

namespace {

// Scratch state for one search. Blossoms are contracted implicitly through
// `base`; `parent` links odd vertices back into the alternating tree.
class BlossomSearch {
public:
    BlossomSearch(std::span<const std::vector<Vertex>> adjacency, std::vector<Vertex>& mate)
        : adj_(adjacency),
          mate_(mate),
          n_(static_cast<int>(adjacency.size())),
          parent_(n_),
          base_(n_),
          in_tree_(n_),
          in_blossom_(n_),
          on_path_(n_) {
        queue_.reserve(n_);
    }

    // Returns the free vertex ending an augmenting path from root, or -1.
    Vertex search(Vertex root) {
        std::fill(parent_.begin(), parent_.end(), kUnmatched);
        std::fill(in_tree_.begin(), in_tree_.end(), 0);
        for (Vertex v = 0; v < n_; ++v) base_[v] = v;
        queue_.clear();
        std::size_t head = 0;
        in_tree_[root] = 1;
        queue_.push_back(root);

        while (head < queue_.size()) {
            Vertex v = queue_[head++];
            for (Vertex to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
                    contract(v, to);
                } else if (parent_[to] == kUnmatched) {
                    parent_[to] = v;
                    if (mate_[to] == kUnmatched) return to;
                    Vertex next = mate_[to];
                    in_tree_[next] = 1;
                    queue_.push_back(next);
                }
            }
        }
        return kUnmatched;
    }

    void augment(Vertex end) {
        while (end != kUnmatched) {
            Vertex pv = parent_[end];
            Vertex ppv = mate_[pv];
            mate_[end] = pv;
            mate_[pv] = end;
            end = ppv;
        }
    }

private:
    Vertex lowest_common_base(Vertex a, Vertex b) {
        std::fill(on_path_.begin(), on_path_.end(), 0);
        for (;;) {
            a = base_[a];
            on_path_[a] = 1;
            if (mate_[a] == kUnmatched) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path_[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract(Vertex v, Vertex to) {
        Vertex b = lowest_common_base(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, b, to);
        mark_path(to, b, v);
        for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue_.push_back(i);
            }
        }
    }

    std::span<const std::vector<Vertex>> adj_;
    std::vector<Vertex>& mate_;
    int n_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> in_tree_;
    std::vector<char> in_blossom_;
    std::vector<char> on_path_;
    std::vector<Vertex> queue_;
};

}  // namespace

int grow_to_maximum(std::span<const std::vector<Vertex>> adjacency, std::vector<Vertex>& mate) {
    const int n = static_cast<int>(adjacency.size());
    mate.resize(n, kUnmatched);

    for (Vertex v = 0; v < n; ++v) {
        if (mate[v] != kUnmatched) continue;
        for (Vertex w : adjacency[v])
            if (mate[w] == kUnmatched) {
                mate[v] = w;
                mate[w] = v;
                break;
            }
    }

    BlossomSearch search(adjacency, mate);
    // A vertex that roots no augmenting path never roots one later.
    for (Vertex root = 0; root < n; ++root) {
        if (mate[root] != kUnmatched) continue;
        Vertex end = search.search(root);
        if (end != kUnmatched) search.augment(end);
    }

    int matched = 0;
    for (Vertex v = 0; v < n; ++v) matched += mate[v] != kUnmatched;
    return matched / 2;
}

namespace {

std::vector<std::vector<Vertex>> adjacency_of(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

}  // namespace

Matching max_matching(const Graph& g) {
    Matching m;
    auto adj = adjacency_of(g);
    grow_to_maximum(adj, m.mate);
    for (Vertex v = 0; v < g.order(); ++v)
        if (m.mate[v] != kUnmatched && v < m.mate[v]) m.pairs.push_back({v, m.mate[v]});
    return m;
}

Deficiency deficiency(const Graph& g) {
    auto m = max_matching(g);
    Deficiency d;
    for (Vertex v = 0; v < g.order(); ++v)
        if (m.mate[v] == kUnmatched) d.unmatched.push_back(g.label(v));
    d.value = static_cast<int>(d.unmatched.size());
    return d;
}

bool has_perfect_matching(const Graph& g) { return deficiency(g).value == 0; }

bool has_almost_perfect_matching(const Graph& g) { return deficiency(g).value == 1; }

bool has_perfect_fractional_matching(const Graph& g) {
    const int n = g.order();
    // v' = v, v'' = n + v
    std::vector<std::vector<Vertex>> cover(2 * n);
    for (const auto& e : g.edges()) {
        cover[e.u].push_back(n + e.v);
        cover[n + e.v].push_back(e.u);
        cover[e.v].push_back(n + e.u);
        cover[n + e.u].push_back(e.v);
    }
    for (auto& nbrs : cover) std::sort(nbrs.begin(), nbrs.end());
    std::vector<Vertex> mate;
    return grow_to_maximum(cover, mate) == n;
}

}  // namespace ikmp
