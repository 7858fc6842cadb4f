// ikm.hpp
//
// Integer k-matchings: an assignment h: E -> {0..k} with every vertex sum
// at most k. Perfect when every sum equals k, almost perfect when exactly
// one vertex sums to k-1 and the rest to k.
//
// Existence questions are answered through a degree-exact gadget graph:
// vertex v becomes b(v) copies, and every edge uw becomes k gadget pairs
// (x, y) with x joined to all copies of u, y to all copies of w, and x to y.
// A gadget pair whose two ends are matched to copies carries one unit of
// h(uw); a pair matched to itself carries nothing. Hence a perfect matching
// of the gadget graph is a b-factor of G, and
//     nu(gadget) = k|E| + mu_k(G).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ikmp/graph.hpp"

namespace ikmp {

struct IntegerKMatching {
    int k = 1;
    /// values[i] is h(g.edges()[i]).
    std::vector<int> values;

    int total() const;
};

enum class IkmKind { perfect, almost_perfect, neither };

std::string to_string(IkmKind kind);

struct IkmClass {
    IkmKind kind = IkmKind::neither;
    std::optional<Vertex> deficient_vertex;  // label of the vertex with sum k-1
};

/// Raised by verify() when an assignment breaks 0 <= h(e) <= k or a vertex
/// sum exceeds k.
class ConstraintViolation : public InputError {
public:
    using InputError::InputError;
};

/// Validates m against g and classifies it. Throws InputError when m does not
/// cover exactly E(g), ConstraintViolation when a bound is broken.
IkmClass verify(const Graph& g, const IntegerKMatching& m);

struct GadgetGraph {
    int k = 1;
    /// Auxiliary graph as adjacency lists; copies come first, then gadget
    /// pairs edge by edge (x at even offset, y right after it).
    std::vector<std::vector<Vertex>> adjacency;
    /// vertex_copies[v] lists the copy ids of original vertex v.
    std::vector<std::vector<Vertex>> vertex_copies;
    /// edge_gadgets[j] lists the k (x, y) pairs of g.edges()[j]; x faces
    /// edges()[j].u and y faces edges()[j].v.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> edge_gadgets;
    std::vector<int> b;

    int order() const { return static_cast<int>(adjacency.size()); }
    /// Materializes the auxiliary graph.
    Graph graph() const;
};

/// b(v) = k for every v, except b(deficient) = k - 1 when given (dense index).
GadgetGraph build_gadget(const Graph& g, int k, std::optional<Vertex> deficient = std::nullopt);

struct Lemma41Certificate {
    std::vector<Vertex> s;  // labels
    int odd_count = 0;      // odd(G - S)
    int isolated_count = 0; // i(G - S)
    long long slack = 0;    // k|S| + 1 - odd(G-S) - k i(G-S); negative

    friend bool operator==(const Lemma41Certificate&, const Lemma41Certificate&) = default;
};

struct Decision {
    bool exists = false;
    std::optional<IntegerKMatching> assignment;
    std::optional<Lemma41Certificate> certificate;
};

/// Largest |S| searched. Unset means the default: exhaustive for
/// |V| <= 20, otherwise |S| <= 4.
struct CertificateBudget {
    std::optional<int> max_size;
};

Decision decide_perfect_ikm(const Graph& g, int k);

/// With `attach_certificate`, a negative answer also runs the vertex-set
/// certificate search under the default budget.
Decision decide_almost_perfect_ikm(const Graph& g, int k, bool attach_certificate = false);

/// True iff g has a perfect or an almost perfect integer k-matching. Only the
/// class allowed by the parity of k|V| is tested. No assignment is built.
bool admits_near_perfect_ikm(const Graph& g, int k);

/// A maximum integer k-matching (assignment of total mu_k).
IntegerKMatching max_ikm(const Graph& g, int k);
int mu_k(const Graph& g, int k);

/// Minimum |S| (ties: lexicographically smallest) with
/// odd(G-S) + k i(G-S) > k|S| + 1. Such an S rules out an almost perfect
/// integer k-matching; not finding one proves nothing.
std::optional<Lemma41Certificate> lemma41_certificate(const Graph& g, int k,
                                                      CertificateBudget budget = {});

/// Connected graph whose blocks are all odd cycles or K2, with minimum degree
/// at least 2 and no vertex shared by two odd cycles. Throws InputError on
/// disconnected input.
bool is_odd_cycle_tree(const Graph& h);

enum class SupportKind { single_edge, odd_cycle_tree, other };

struct SupportComponent {
    std::vector<Vertex> vertices;  // labels
    int edges = 0;
    SupportKind kind = SupportKind::other;
};

struct SupportReport {
    std::vector<SupportComponent> components;
    /// Every component is a single edge or an odd-cycle-tree graph.
    bool well_formed = true;
};

/// Structure of the subgraph formed by the non-zero edges of m.
SupportReport support_structure(const Graph& g, const IntegerKMatching& m);

}  // namespace ikmp
