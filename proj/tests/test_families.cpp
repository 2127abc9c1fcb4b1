#include <gtest/gtest.h>

#include "hybridtile/counting.hpp"
#include "hybridtile/families.hpp"
#include "hybridtile/formulas.hpp"

using namespace hybridtile;

namespace {

std::size_t side_count(const MatchGraph& g, int cls) {
    std::size_t n = 0;
    for (VertexId v : g.vertex_ids()) n += g.data(v).cls == cls;
    return n;
}

bool balanced(const MatchGraph& g) { return side_count(g, kBlack) == side_count(g, kWhite); }

}  // namespace

TEST(Families, AztecRectangleSizes) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto g = aztec_rectangle(m, n);
            EXPECT_EQ(g.num_vertices(), static_cast<std::size_t>(2 * m * n + m + n));
            EXPECT_EQ(g.boundary("bottom").size(), static_cast<std::size_t>(n));
        }
    // n = 0 degenerates to a column; the baseless one keeps a single bottom vertex
    EXPECT_EQ(aztec_rectangle(2, 0, ARVariant::baseless).boundary("bottom").size(), 1u);
    EXPECT_EQ(aztec_rectangle(3, 4).num_vertices(), 31u);
    EXPECT_EQ(aztec_rectangle(3, 4, ARVariant::baseless).num_vertices(), 27u);
    EXPECT_EQ(aztec_rectangle(3, 4, ARVariant::combed).num_vertices(), 35u);
}

TEST(Families, AztecDiamondCounts) {
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(count_matchings_oracle(aztec_rectangle(n, n)), Rational(aztec_diamond(n))) << "n=" << n;
    EXPECT_EQ(aztec_rectangle(1, 1).num_vertices(), 4u);
}

TEST(Families, BaselessHasNoMatchings) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) EXPECT_EQ(count_matchings(aztec_rectangle(m, n, ARVariant::baseless)), Rational(0));
}

TEST(Families, CombAddsPendants) {
    auto g = aztec_rectangle(3, 4);
    auto c = comb(g, "bottom", CombSide::bottom);
    EXPECT_EQ(c.num_vertices(), g.num_vertices() + 4);
    EXPECT_EQ(c.boundary("tips").size(), 4u);
    for (VertexId t : c.boundary("tips")) EXPECT_EQ(c.degree(t), 1u);
    EXPECT_TRUE(c.classes_consistent());
}

TEST(Families, CombOnEmptyListIsIdentity) {
    auto g = aztec_rectangle(2, 2);
    g.set_boundary("none", {});
    auto c = comb(g, "none", CombSide::top);
    EXPECT_EQ(c.num_vertices(), g.num_vertices());
    EXPECT_EQ(c.num_edges(), g.num_edges());
}

TEST(Families, SideTrimmed) {
    auto rr = side_trimmed(1, 1, TrimKind::RR);
    EXPECT_EQ(rr.num_vertices(), aztec_rectangle(1, 1).num_vertices() - 1);
    EXPECT_EQ(count_matchings(rr), count_matchings_oracle(rr));
    auto lr = side_trimmed(1, 2, TrimKind::LR);
    auto tlr = side_trimmed(1, 2, TrimKind::TLR);
    EXPECT_EQ(tlr.num_vertices(), lr.num_vertices() - 2);
    EXPECT_EQ(side_trimmed(2, 6, TrimKind::LR).num_vertices(), aztec_rectangle(2, 6).num_vertices() - 2);
}

TEST(Families, LShapedSizes) {
    // glued along min(b+1, d) vertices; surplus bottom vertices of the top block are dropped
    auto a = l_shaped(3, 3, 2, 6, LKind::L);
    EXPECT_EQ(a.num_vertices(), aztec_rectangle(3, 3, ARVariant::baseless).num_vertices() +
                                    side_trimmed(2, 6, TrimKind::LR).num_vertices() - 4);
    auto b = l_shaped(3, 5, 2, 4, LKind::L);
    EXPECT_EQ(b.num_vertices(), aztec_rectangle(3, 5, ARVariant::baseless).num_vertices() - 2 +
                                    side_trimmed(2, 4, TrimKind::LR).num_vertices() - 4);
    auto d = l_shaped(4, 6, 2, 4, LKind::Lbar);
    EXPECT_EQ(d.num_vertices(), aztec_rectangle(4, 6, ARVariant::baseless).num_vertices() - 3 +
                                    side_trimmed(2, 4, TrimKind::TLR).num_vertices() - 4);
    for (auto* g : {&a, &b, &d}) EXPECT_TRUE(g->classes_consistent());
}

TEST(Families, HexagonCounts) {
    EXPECT_EQ(count_matchings_oracle(hexagon_dual(1, 1, 1)), Rational(2));
    EXPECT_EQ(count_matchings_oracle(hexagon_dual(4, 1, 4), 48), Rational(70));
    EXPECT_EQ(count_matchings_oracle(hexagon_dual(2, 2, 2)), Rational(20));
    EXPECT_EQ(count_matchings(hexagon_dual(2, 2, 2)), Rational(macmahon(2, 2, 2)));
}

TEST(Families, HalfHoneycomb) {
    auto b = half_honeycomb(3, 7, 3);
    EXPECT_EQ(b.boundary("top").size(), 6u);
    auto small = half_honeycomb(1, 1, 1);
    EXPECT_EQ(small.boundary("top").size(), 2u);
    // removing the first a top vertices leaves one tiling, V_{a,b}(1..a) = 1
    for (auto [a, bb] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        auto g = half_honeycomb(bb, a, a);
        auto top = g.boundary("top");
        for (int i = 0; i < a; ++i) g.remove_vertex(top[static_cast<std::size_t>(i)]);
        EXPECT_EQ(count_matchings_oracle(g, 60), Rational(1)) << a << "," << bb;
    }
    EXPECT_THROW(half_honeycomb(1, 1, 2), InvalidParams);
}

TEST(Families, GammaBalance) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= b; ++c)
                for (int d = 1; d <= 3; ++d)
                    for (int e = 1; e <= 5; ++e) {
                        auto g = gamma(a, b, c, d, e);
                        EXPECT_EQ(balanced(g), e == c + d - 1) << a << b << c << d << e;
                        if (e != c + d - 1 && g.num_vertices() <= 30)
                            EXPECT_EQ(count_matchings_oracle(g), Rational(0));
                    }
}

TEST(Families, GammaExamples) {
    auto left = gamma(3, 7, 3, 3, 4);
    auto right = gamma(3, 7, 3, 4, 8);
    EXPECT_TRUE(left.classes_consistent());
    EXPECT_TRUE(right.classes_consistent());
    EXPECT_EQ(count_matchings(left), Rational(0));
    EXPECT_EQ(count_matchings(gamma(3, 7, 3, 3, 5)), Rational(gamma_count(3, 7, 3, 3, 5)));
}

TEST(Families, ConnectedSum) {
    MatchGraph k2;
    k2.add_vertex(0);
    k2.add_vertex(1);
    k2.add_edge(0, 1);
    k2.set_boundary("end", {1});
    MatchGraph other = k2;
    other.set_boundary("end", {0});
    auto p3 = connected_sum(k2, other, "end", "end");
    EXPECT_EQ(p3.num_vertices(), 3u);
    EXPECT_EQ(p3.num_edges(), 2u);
    EXPECT_EQ(count_matchings(p3), Rational(0));

    auto a = aztec_rectangle(2, 2), b = hexagon_dual(1, 2, 1);
    auto u = connected_sum(a, b, "", "");
    EXPECT_EQ(u.num_vertices(), a.num_vertices() + b.num_vertices());
    EXPECT_EQ(count_matchings(u), count_matchings(a) * count_matchings(b));
    EXPECT_TRUE(u.has_boundary("other:bottom"));

    a.set_boundary("two", {a.boundary("bottom")[0], a.boundary("bottom")[1]});
    EXPECT_THROW(connected_sum(a, b, "two", "bottom"), LengthMismatch);
}

TEST(Families, ConnectedSumAssociative) {
    auto x = aztec_rectangle(1, 2), y = aztec_rectangle(1, 2), z = aztec_rectangle(1, 2);
    x.set_boundary("l", {x.boundary("bottom")[0]});
    y.set_boundary("l", {y.boundary("top")[0]});
    y.set_boundary("r", {y.boundary("bottom")[1]});
    z.set_boundary("r", {z.boundary("top")[1]});
    auto xy = connected_sum(x, y, "l", "l");
    auto left = connected_sum(xy, z, "other:r", "r");
    auto yz = connected_sum(y, z, "r", "r");
    auto right = connected_sum(x, yz, "l", "l");
    EXPECT_EQ(left.num_vertices(), right.num_vertices());
    EXPECT_EQ(left.num_edges(), right.num_edges());
    EXPECT_EQ(count_matchings(left), count_matchings(right));
}

TEST(Families, GridCounts) {
    EXPECT_EQ(count_matchings(grid_graph(2, 2)), Rational(2));
    EXPECT_EQ(count_matchings(grid_graph(2, 4)), Rational(5));
    EXPECT_EQ(count_matchings(grid_graph(4, 4)), Rational(36));
}
