#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "twostruct/core.hpp"

using namespace twostruct;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InternalMismatch;
}

}  // namespace

TEST(Build, UnusedColorOnSingleVertex) {
    ColorCatalog cat;
    cat.add_symmetric("a");
    EXPECT_EQ(kind_of([&] { TwoStructure::build(1, cat, {ColorId(0)}); }), ErrorKind::UnusedColor);
}

TEST(Build, CycleTournament) {
    ColorCatalog cat;
    auto [a, b] = cat.add_asymmetric_pair("a", "b");
    std::vector<ColorId> m(9, a);
    auto set = [&](Vertex u, Vertex v) {
        m[u * 3 + v] = a;
        m[v * 3 + u] = b;
    };
    set(0, 1);
    set(1, 2);
    set(2, 0);
    auto s = TwoStructure::build(3, cat, m);
    EXPECT_EQ(s.color_count(), 2u);
    EXPECT_TRUE(s.is_reversible());
    EXPECT_EQ(s.star_of(a), b);
}

TEST(Build, AsymmetricColorOnBothDirections) {
    ColorCatalog cat;
    auto [a, b] = cat.add_asymmetric_pair("a", "b");
    std::vector<ColorId> m(4, a);
    (void)b;
    EXPECT_EQ(kind_of([&] { TwoStructure::build(2, cat, m); }), ErrorKind::StarViolation);
}

TEST(FromGraph, Examples) {
    auto p4 = fixtures::p4();
    EXPECT_EQ(p4.color_count(), 2u);
    EXPECT_EQ(p4.symmetric_colors().size(), 2u);
    auto k3 = from_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto e3 = from_graph(3, {});
    EXPECT_EQ(k3.color_count(), 1u);
    EXPECT_EQ(e3.color_count(), 1u);
    EXPECT_TRUE(same_partition(k3, e3));
}

TEST(FromTournament, Examples) {
    auto l3 = linear_order(3);
    EXPECT_EQ(l3.asymmetric_colors().size(), 2u);
    EXPECT_EQ(fixtures::c3t().asymmetric_colors().size(), 2u);
    EXPECT_EQ(kind_of([] { from_tournament(2, {{0, 1}, {1, 0}}); }), ErrorKind::NotATournament);
}

TEST(Star, InvolutionAndReversible) {
    auto p4 = fixtures::p4();
    EXPECT_TRUE(same_partition(star(p4), p4));
    auto nr = fixtures::nonreversible3();
    EXPECT_FALSE(nr.is_reversible());
    EXPECT_FALSE(same_partition(star(nr), nr));
    EXPECT_TRUE(same_partition(star(star(nr)), nr));
}

TEST(Meet, Properties) {
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < 50; ++i) {
        auto s = random_structure({5, 4, false}, rng);
        EXPECT_TRUE(same_partition(meet(s, s).structure, s));
        auto m = meet(s, star(s)).structure;
        EXPECT_TRUE(m.is_reversible());
    }
    auto l4 = linear_order(4);
    EXPECT_TRUE(same_partition(meet(l4, star(l4)).structure, l4));
}

TEST(Substructure, Examples) {
    auto p4 = fixtures::p4();
    EXPECT_TRUE(same_partition(substructure(p4, p4.vertices()).structure, p4));
    auto edge = substructure(p4, {0, 1}).structure;
    EXPECT_EQ(edge.color_count(), 1u);
    auto pair = substructure(fixtures::c3t(), {0, 1}).structure;
    EXPECT_EQ(pair.asymmetric_colors().size(), 2u);
}

TEST(Reversibility, Split) {
    auto g = is_reversible(fixtures::p4());
    EXPECT_TRUE(g.reversible);
    EXPECT_TRUE(g.asymmetric.empty());
    auto t = is_reversible(linear_order(4));
    EXPECT_TRUE(t.reversible);
    EXPECT_TRUE(t.symmetric.empty());
    EXPECT_FALSE(is_reversible(fixtures::nonreversible3()).reversible);
}

TEST(Derive, DropsUnusedColors) {
    std::vector<std::uint16_t> raw = {kNoColor, 2, 2, kNoColor};
    auto d = TwoStructure::derive(2, {"x", "y", "z"}, raw);
    EXPECT_EQ(d.structure.color_count(), 1u);
    EXPECT_EQ(d.structure.name(ColorId(0)), "z");
}
