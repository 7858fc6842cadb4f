#include <gtest/gtest.h>

#include <random>

#include "ikmp/generators.hpp"
#include "ikmp/ikm.hpp"
#include "ikmp/matching.hpp"
#include "ikmp/preclusion.hpp"
#include "test_support.hpp"

namespace ikmp {
namespace {

using testing::edge_list;

PreclusionResult exact(const Graph& g, int k, bool strong, unsigned jobs = 1) {
    return preclusion_number(g, PreclusionQuery{k, strong, ExactMode{}, kDefaultBudget, jobs});
}

int exact_value(const Graph& g, int k, bool strong) { return exact(g, k, strong).value.value(); }

TEST(CombinationTest, BinomialAndUnrank) {
    EXPECT_EQ(binomial(21, 5), 20349u);
    EXPECT_EQ(binomial(28, 5), 98280u);
    EXPECT_EQ(binomial(5, 7), 0u);
    EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
    // unranking walks the lexicographic order
    std::vector<int> combo{0, 1, 2};
    for (std::uint64_t r = 0; r < binomial(7, 3); ++r) {
        ASSERT_EQ(unrank_combination(7, 3, r), combo);
        int i = 2;
        while (i >= 0 && combo[i] == 7 - 3 + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < 3; ++j) combo[j] = combo[j - 1] + 1;
    }
}

TEST(IsPreclusionSetTest, Examples) {
    EXPECT_TRUE(is_preclusion_set(complete(3), 3, FaultSet({}, {{0, 1}}), false));
    EXPECT_FALSE(is_preclusion_set(complete(4), 3, FaultSet{}, false));
    EXPECT_TRUE(is_preclusion_set(complete(5), 3, FaultSet({}, {{0, 1}, {0, 2}, {1, 2}}), false));
    EXPECT_THROW(is_preclusion_set(complete(4), 3, FaultSet({0}, {}), false), InputError);
    // deleting every vertex leaves the empty graph, which is trivially perfect
    EXPECT_FALSE(is_preclusion_set(complete(2), 3, FaultSet({0, 1}, {}), true));
}

TEST(ExactTest, Examples) {
    EXPECT_EQ(exact_value(complete(6), 3, false), 5);
    EXPECT_EQ(exact_value(complete(5), 3, false), 3);
    EXPECT_EQ(exact_value(cycle(4), 3, true), 1);
    EXPECT_EQ(exact_value(path(3), 3, false), 0);
    EXPECT_EQ(exact_value(path(5), 3, true), 0);
}

TEST(ExactTest, WitnessIsLexicographicallyFirst) {
    auto r = exact(complete(5), 3, false);
    ASSERT_TRUE(r.witness);
    // {01,02,03} and {01,02,04} leave vertex 0 pendant and still admit an
    // almost perfect assignment; the triangle {01,02,12} is rank 2 of size 3
    EXPECT_EQ(r.witness->edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(r.status, PreclusionStatus::proved);
    EXPECT_EQ(r.checked, 1 + 10 + 45 + 3u);
}

TEST(ExactTest, NoPreclusionSetAtAll) {
    // K1 with k = 1: the lone vertex is the unsaturated one, and deleting it
    // leaves the empty graph
    auto r = exact(Graph(1, {}), 1, true);
    EXPECT_FALSE(r.value);
    EXPECT_EQ(r.status, PreclusionStatus::proved);
}

TEST(ExactTest, AgreesWithOracleOnRandomGraphs) {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 40; ++seed) {
        std::mt19937_64 rng(seed);
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.3 + static_cast<double>(rng() % 60) / 100.0, seed);
        if (g.size() > 10) continue;
        ++tested;
        for (int k = 1; k <= 3; ++k)
            for (bool strong : {false, true}) {
                auto r = exact(g, k, strong);
                auto expected = oracle::preclusion_number(n, edge_list(g), k, strong, 6);
                if (!expected) continue;
                ASSERT_TRUE(r.value) << write_graph(g);
                EXPECT_EQ(*r.value, *expected) << write_graph(g) << " k=" << k << " strong=" << strong;
                EXPECT_TRUE(is_preclusion_set(g, k, *r.witness, strong));
                EXPECT_EQ(static_cast<int>(r.witness->size()), *r.value);
            }
    }
}

TEST(ExactTest, IndependentOfWorkerCount) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(7, 0.6, seed);
        for (bool strong : {false, true}) {
            auto one = exact(g, 3, strong, 1);
            auto four = exact(g, 3, strong, 4);
            EXPECT_EQ(one.value, four.value);
            EXPECT_EQ(one.witness, four.witness);
            EXPECT_EQ(one.checked, four.checked);
        }
    }
}

TEST(ExactTest, StrongAtMostPlainAtMostMinDegree) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed);
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, seed);
        for (int k : {1, 2, 3}) {
            int mp = exact_value(g, k, false);
            int smp = exact_value(g, k, true);
            EXPECT_LE(smp, mp);
            if (k >= 2) EXPECT_LE(mp, min_degree(g));
        }
    }
}

TEST(ExactTest, BudgetExceeded) {
    PreclusionQuery q{3, true, ExactMode{}, 1000, 1};
    EXPECT_THROW(preclusion_number(complete(7), q), BudgetExceeded);
}

TEST(BipartiteTest, PreclusionLawsOnRandomBipartiteGraphs) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
        Graph g = random_bipartite(a, b, 0.3 + static_cast<double>(rng() % 70) / 100.0, seed);
        int mpk = exact_value(g, 3, false), smpk = exact_value(g, 3, true);
        if (g.order() % 2) {
            EXPECT_EQ(mpk, 0);
            EXPECT_EQ(smpk, 0);
        } else {
            EXPECT_EQ(mpk, exact_value(g, 1, false));
            EXPECT_LE(smpk, exact_value(g, 1, true));
        }
    }
}

TEST(SpecializedTest, Examples) {
    EXPECT_EQ(specialized_numbers(complete(4)).mp, 3);
    EXPECT_EQ(specialized_numbers(path(5)).smp, 1);
    auto star = specialized_numbers(complete_bipartite(1, 3));
    EXPECT_EQ(star.fmp, 0);
    EXPECT_TRUE(star.fmp_consistent());
}

TEST(SpecializedTest, FractionalRoutesAgree) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(6 + static_cast<int>(seed % 3), 0.5, seed);
        auto s = specialized_numbers(g);
        EXPECT_TRUE(s.fmp_consistent()) << write_graph(g);
    }
}

TEST(StarWitnessTest, Examples) {
    auto a52 = arrangement({5, 2}).graph;
    EXPECT_EQ(star_witness(a52, 3, 7, true).size(), 6u);
    EXPECT_EQ(star_witness(complete(6), 3, 2).size(), 5u);
    EXPECT_EQ(star_witness(cycle(4), 3, 0, true).size(), 2u);
    EXPECT_THROW(star_witness(cycle(4), 1, 0), InputError);
    EXPECT_THROW(star_witness(cycle(4), 3, 9), InputError);
}

TEST(VerifyModeTest, ProvesAndRefutes) {
    auto run = [](const Graph& g, int m, bool strong) {
        return preclusion_number(g, PreclusionQuery{3, strong, VerifyMode{m}, kDefaultBudget, 1});
    };
    auto ok = run(complete(6), 5, false);
    EXPECT_EQ(ok.status, PreclusionStatus::proved);
    EXPECT_EQ(ok.value, 5);
    ASSERT_TRUE(ok.witness);
    EXPECT_EQ(ok.witness->size(), 5u);

    auto too_high = run(complete(6), 6, false);
    EXPECT_EQ(too_high.status, PreclusionStatus::refuted);
    ASSERT_TRUE(too_high.counterexample);
    EXPECT_EQ(too_high.counterexample->size(), 5u);

    auto too_low = run(complete(6), 4, false);
    EXPECT_EQ(too_low.status, PreclusionStatus::refuted);
    EXPECT_FALSE(too_low.witness);

    EXPECT_EQ(run(cycle(4), 1, true).status, PreclusionStatus::proved);
}

// Re-checks a 1% subsample of a verify-mode lower bound with the oracle.
TEST(VerifyModeTest, LowerBoundSubsampleSurvivesUnderOracle) {
    Graph k7 = complete(7);
    auto r = preclusion_number(k7, PreclusionQuery{3, true, VerifyMode{5}, kDefaultBudget, 1});
    ASSERT_EQ(r.status, PreclusionStatus::proved);
    const int elements = k7.size() + k7.order();
    const std::uint64_t total = binomial(elements, 4);
    std::mt19937_64 rng(5);
    for (std::uint64_t i = 0; i < total / 100; ++i) {
        auto combo = unrank_combination(elements, 4, rng() % total);
        auto [n, edges] = oracle::delete_elements(7, edge_list(k7), combo);
        EXPECT_TRUE(oracle::has_perfect_ikm(n, edges, 3) || oracle::has_almost_perfect_ikm(n, edges, 3));
    }
}

// A triangle plus n-5 vertices leaves K5 minus a triangle, which has no
// near-perfect assignment; so the strong number of K_n never exceeds n-2.
TEST(VerifyModeTest, CompleteGraphStrongValuesAgreeWithOracle) {
    for (int n = 5; n <= 7; ++n) {
        Graph g = complete(n);
        auto r = preclusion_number(g, PreclusionQuery{3, true, VerifyMode{n - 2}, kDefaultBudget, 1});
        EXPECT_EQ(r.status, PreclusionStatus::proved) << n;
        EXPECT_EQ(r.value, n - 2);
        EXPECT_EQ(oracle::preclusion_number(n, edge_list(g), 3, true, n - 1), n - 2);
        std::vector<Vertex> drop;
        for (int v = 3; v < n - 2; ++v) drop.push_back(v);
        EXPECT_TRUE(is_preclusion_set(g, 3, FaultSet(drop, {{0, 1}, {0, 2}, {1, 2}}), true));
    }
}

TEST(SampleModeTest, ConsistentAndDeterministic) {
    auto a52 = arrangement({5, 2}).graph;
    PreclusionQuery q{3, true, SampleMode{6, 300, 1}, kDefaultBudget, 1};
    auto r = preclusion_number(a52, q);
    EXPECT_EQ(r.status, PreclusionStatus::sampled_no_counterexample);
    EXPECT_FALSE(r.value);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->size(), 6u);
    EXPECT_EQ(r.checked, 301u);

    // claiming too much is caught when some sample precludes
    PreclusionQuery bad{3, false, SampleMode{6, 2000, 3}, kDefaultBudget, 1};
    auto k6 = preclusion_number(complete(6), bad);
    EXPECT_EQ(k6.status, PreclusionStatus::refuted);
    ASSERT_TRUE(k6.counterexample);
    EXPECT_TRUE(is_preclusion_set(complete(6), 3, *k6.counterexample, false));
}

TEST(ModeTest, InvalidParameters) {
    EXPECT_THROW(preclusion_number(cycle(4), PreclusionQuery{3, true, VerifyMode{-1}}), InputError);
    EXPECT_THROW(preclusion_number(cycle(4), PreclusionQuery{3, true, SampleMode{2, 0, 1}}), InputError);
    EXPECT_THROW(preclusion_number(cycle(4), PreclusionQuery{0, true, ExactMode{}}), InputError);
}

}  // namespace
}  // namespace ikmp
