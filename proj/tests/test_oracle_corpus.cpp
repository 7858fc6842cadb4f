// Gadget decisions against the independent enumerator on the stored corpus.

#include <gtest/gtest.h>

#include "ikmp/ikm.hpp"
#include "test_support.hpp"

namespace ikmp {
namespace {

TEST(OracleCorpusTest, CorpusIsWhatItClaims) {
    auto corpus = testing::load_corpus();
    EXPECT_EQ(corpus.size(), 500u);
    for (const auto& g : corpus) EXPECT_LE(g.size(), 8);
}

TEST(OracleCorpusTest, GadgetAgreesWithEnumeration) {
    for (const auto& g : testing::load_corpus()) {
        auto edges = testing::edge_list(g);
        for (int k = 1; k <= 3; ++k) {
            auto sweep = oracle::sweep_ikm(g.order(), edges, k);
            ASSERT_EQ(mu_k(g, k), sweep.mu_k) << write_graph(g) << "k=" << k;
            ASSERT_EQ(decide_perfect_ikm(g, k).exists, sweep.perfect) << write_graph(g) << "k=" << k;
            ASSERT_EQ(decide_almost_perfect_ikm(g, k).exists, sweep.almost_perfect) << write_graph(g) << "k=" << k;
            // the two oracle routes agree with each other as well
            ASSERT_EQ(oracle::has_perfect_ikm(g.order(), edges, k), sweep.perfect);
            ASSERT_EQ(oracle::has_almost_perfect_ikm(g.order(), edges, k), sweep.almost_perfect);
        }
    }
}

}  // namespace
}  // namespace ikmp
