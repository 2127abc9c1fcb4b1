#include <gtest/gtest.h>

#include <random>

#include "hybridtile/counting.hpp"
#include "hybridtile/families.hpp"

using namespace hybridtile;

namespace {

MatchGraph path(int n) {
    MatchGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

MatchGraph random_graph(std::mt19937& rng, int n, double p) {
    static const Rational weights[] = {1, Rational(1, 2), 2, 3};
    std::bernoulli_distribution coin(p);
    MatchGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j, weights[rng() % 4]);
    return g;
}

}  // namespace

TEST(Counting, Trivial) {
    EXPECT_EQ(count_matchings(MatchGraph{}), Rational(1));
    EXPECT_EQ(count_matchings(path(2)), Rational(1));
    EXPECT_EQ(count_matchings(path(3)), Rational(0));
    EXPECT_EQ(count_matchings_oracle(path(3)), Rational(0));
    EXPECT_EQ(count_matchings(path(4)), Rational(1));
}

TEST(Counting, AztecDiamondOrderTwo) {
    EXPECT_EQ(count_matchings(aztec_rectangle(2, 2)), Rational(8));
}

TEST(Counting, OracleExamples) {
    EXPECT_EQ(count_matchings_oracle(hexagon_dual(1, 1, 1)), Rational(2));
    EXPECT_EQ(count_matchings_oracle(grid_graph(2, 2)), Rational(2));
    // AR_{1,2} has 7 vertices, so only its weighted count of zero is checkable
    auto odd = with_uniform_weight(aztec_rectangle(1, 2), Rational(1, 2));
    EXPECT_EQ(count_matchings_oracle(odd), Rational(0));
    auto half = with_uniform_weight(aztec_rectangle(1, 1), Rational(1, 2));
    EXPECT_EQ(count_matchings_oracle(half), Rational(1, 2));
    EXPECT_EQ(count_matchings(half), Rational(1, 2));
}

TEST(Counting, UnbalancedBipartiteIsZero) {
    MatchGraph g;
    g.add_vertex(0, VertexData{kBlack});
    g.add_vertex(1, VertexData{kWhite});
    g.add_vertex(2, VertexData{kBlack});
    g.add_vertex(3, VertexData{kBlack});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    EXPECT_EQ(count_matchings(g), Rational(0));
    EXPECT_EQ(count_matchings_oracle(g), Rational(0));
}

TEST(Counting, MultiplicativeOverComponents) {
    auto a = grid_graph(2, 3), b = hexagon_dual(2, 1, 2);
    MatchGraph both = a;
    append_graph(both, b);
    EXPECT_EQ(count_matchings(both), count_matchings(a) * count_matchings(b));
}

TEST(Counting, ForcedEdgeRemovalScalesByWeight) {
    auto g = grid_graph(2, 4);
    MatchGraph pendant = g;
    VertexId corner = g.vertex_ids().front();
    // tip2 is a leaf, so tip-tip2 is forced and the edge to the corner never used
    VertexId tip = pendant.add_vertex(VertexData{});
    VertexId tip2 = pendant.add_vertex(VertexData{});
    pendant.add_edge(tip, tip2, Rational(5, 3));
    pendant.add_edge(tip, corner, 2);
    EXPECT_EQ(count_matchings(pendant), Rational(5, 3) * count_matchings(g));
    EXPECT_EQ(count_matchings_oracle(pendant), Rational(5, 3) * count_matchings(g));
}

TEST(Counting, BudgetsRaiseResourceLimit) {
    auto g = grid_graph(6, 6);
    EXPECT_THROW(count_matchings_oracle(g, 20), ResourceLimit);
    EXPECT_THROW(count_matchings(g, CountOptions{10, 0}), ResourceLimit);
    EXPECT_THROW(count_matchings(g, CountOptions{0, 2}), ResourceLimit);
}

TEST(Counting, RandomGraphsAgreeWithOracle) {
    std::mt19937 rng(1234);
    for (int it = 0; it < 150; ++it) {
        auto g = random_graph(rng, 2 + static_cast<int>(rng() % 13), 0.35);
        ASSERT_EQ(count_matchings(g), count_matchings_oracle(g)) << "iteration " << it;
    }
}

TEST(SplitVerdict, DisjointEdgesFactor) {
    MatchGraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex(i, VertexData{i % 2 ? kWhite : kBlack});
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    EXPECT_EQ(split_verdict(g, {0, 1}), SplitVerdict::Factor);
}

TEST(SplitVerdict, SealedSurplusIsZero) {
    // two white leaves hang off one black vertex, which also leads out of H
    MatchGraph g;
    g.add_vertex(0, VertexData{kBlack});
    g.add_vertex(1, VertexData{kWhite});
    g.add_vertex(2, VertexData{kWhite});
    g.add_vertex(3, VertexData{kWhite});
    g.add_vertex(4, VertexData{kBlack});
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    EXPECT_EQ(split_verdict(g, {0, 1, 2}), SplitVerdict::Zero);
    EXPECT_EQ(count_matchings(g), Rational(0));
}

TEST(SplitVerdict, LeakyBothSidesIsInapplicable) {
    auto g = path(6);
    EXPECT_EQ(split_verdict(g, {2, 3}), SplitVerdict::Inapplicable);
}
