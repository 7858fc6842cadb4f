#include <gtest/gtest.h>

#include <set>

#include "ikmp/generators.hpp"

namespace ikmp {
namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

bool is_regular(const Graph& g, int d) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

TEST(FamiliesTest, Basic) {
    Graph k5 = complete(5);
    EXPECT_EQ(k5.size(), 10);
    EXPECT_TRUE(is_regular(k5, 4));
    Graph c7 = cycle(7);
    EXPECT_EQ(c7.size(), 7);
    EXPECT_TRUE(is_regular(c7, 2));
    EXPECT_EQ(complete_bipartite(3, 3).size(), 9);
    EXPECT_EQ(path(5).size(), 4);
}

TEST(FamiliesTest, RangeErrors) {
    EXPECT_THROW(complete(0), InputError);
    EXPECT_THROW(cycle(2), InputError);
    EXPECT_THROW(random_graph(4, 1.5, 0), InputError);
    EXPECT_THROW(arrangement({4, 4}), InputError);
    EXPECT_THROW(arrangement({1, 1}), InputError);
}

TEST(RandomTest, ExtremesAndDeterminism) {
    EXPECT_EQ(random_bipartite(3, 3, 1.0, 99), complete_bipartite(3, 3));
    EXPECT_EQ(random_bipartite(4, 4, 0.0, 99).size(), 0);
    EXPECT_EQ(random_bipartite(5, 5, 0.5, 7), random_bipartite(5, 5, 0.5, 7));
    EXPECT_EQ(random_graph(9, 0.4, 3), random_graph(9, 0.4, 3));
    EXPECT_TRUE(is_bipartite(random_bipartite(6, 5, 0.6, 1)));
}

TEST(ArrangementTest, A42) {
    auto a = arrangement({4, 2});
    EXPECT_EQ(a.graph.order(), 12);
    EXPECT_EQ(a.graph.size(), 24);
    EXPECT_TRUE(is_regular(a.graph, 4));
    EXPECT_EQ(a.labels.front(), (std::vector<int>{1, 2}));
    EXPECT_EQ(a.labels.back(), (std::vector<int>{4, 3}));
}

TEST(ArrangementTest, SEqualsOneIsComplete) {
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(arrangement({n, 1}).graph, complete(n));
}

TEST(ArrangementTest, A52CrossEdges) {
    auto a = arrangement({5, 2});
    EXPECT_EQ(a.graph.order(), 20);
    EXPECT_TRUE(is_regular(a.graph, 6));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            int cross = 0;
            for (const auto& e : a.graph.edges())
                if ((a.block_of(e.u) == i && a.block_of(e.v) == j) || (a.block_of(e.u) == j && a.block_of(e.v) == i))
                    ++cross;
            EXPECT_EQ(cross, 3);
        }
}

class ArrangementInvariants : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(ArrangementInvariants, CountsRegularityBlocks) {
    auto [n, s] = GetParam();
    auto a = arrangement({n, s});
    const auto& g = a.graph;
    EXPECT_EQ(g.order(), factorial(n) / factorial(n - s));
    EXPECT_TRUE(is_regular(g, s * (n - s)));

    // adjacency is exactly "differ in one position"
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w = v + 1; w < g.order(); ++w) {
            int diff = 0;
            for (int p = 0; p < s; ++p) diff += a.labels[v][p] != a.labels[w][p];
            ASSERT_EQ(g.has_edge(v, w), diff == 1);
        }

    ASSERT_EQ(static_cast<int>(a.blocks.size()), n);
    for (const auto& block : a.blocks) {
        EXPECT_EQ(static_cast<long long>(block.size()), factorial(n - 1) / factorial(n - s));
        // induced block has the order and regularity of A(n-1, s-1)
        if (s >= 2) {
            Graph h = induced_subgraph(g, block);
            EXPECT_TRUE(is_regular(h, (s - 1) * (n - s)));
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        int outer = 0;
        for (Vertex w : g.neighbors(v)) outer += a.block_of(w) != a.block_of(v);
        EXPECT_EQ(outer, n - s);
    }
    const long long expected_cross = factorial(n - 2) / factorial(n - s - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::set<Vertex> ends;
            long long cross = 0;
            for (const auto& e : g.edges()) {
                int bu = a.block_of(e.u), bv = a.block_of(e.v);
                if ((bu == i && bv == j) || (bu == j && bv == i)) {
                    ++cross;
                    EXPECT_TRUE(ends.insert(e.u).second);
                    EXPECT_TRUE(ends.insert(e.v).second);
                }
            }
            EXPECT_EQ(cross, expected_cross);
        }
    EXPECT_EQ(is_bipartite(g), s == n - 1);
}

INSTANTIATE_TEST_SUITE_P(SmallArrangements, ArrangementInvariants,
                         ::testing::Values(std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}, std::pair{4, 2},
                                           std::pair{4, 3}, std::pair{5, 2}, std::pair{5, 3}, std::pair{5, 4},
                                           std::pair{6, 2}, std::pair{6, 3}, std::pair{6, 4}, std::pair{6, 5}));

}  // namespace
}  // namespace ikmp
