#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "twostruct/io.hpp"

using namespace twostruct;

TEST(Parse2s, Tournament) {
    auto doc = parse_2s(
        "2s 1\n"
        "# a 3-cycle\n"
        "n 3\n"
        "colors 1\n"
        "a asym b\n"
        ". a b\n"
        "b . a\n"
        "a b .\n");
    EXPECT_EQ(doc.structure.color_count(), 2u);
    EXPECT_TRUE(same_partition(doc.structure, fixtures::c3t()));
    EXPECT_FALSE(doc.original);
}

TEST(Parse2s, Errors) {
    try {
        parse_2s("2s 1\nn 2\ncolors 1\na sym\n. a\nz .\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 6u);
        EXPECT_EQ(e.column(), 1u);
    }
    EXPECT_THROW(parse_2s("2s 2\n"), ParseError);
    EXPECT_THROW(parse_2s("2s 1\nn 2\ncolors 1\na bogus\n"), ParseError);
    EXPECT_THROW(parse_2s("2s 1\nn 2\ncolors 1\na sym\n. a\n"), ParseError);
    EXPECT_THROW(parse_2s("2s 1\nn 2\ncolors 2\na sym\nb sym\n. a\na .\n"), Error);
}

TEST(ParseGraph, Path) {
    EXPECT_TRUE(identical(parse_graph("4; 0-1 1-2 2-3"), fixtures::p4()));
    EXPECT_THROW(parse_graph("3; 0-7"), Error);
    EXPECT_THROW(parse_graph("x"), ParseError);
}

TEST(ParseTournament, Chain) {
    EXPECT_TRUE(identical(parse_tournament("3; 0>1 1>2 0>2"), linear_order(3)));
    EXPECT_THROW(parse_tournament("3; 0>1"), Error);
}

TEST(RoundTrip, EveryFormat) {
    std::vector<TwoStructure> cases;
    for (const auto& f : fixtures::all()) cases.push_back(f.s);
    std::mt19937_64 rng(4);
    for (std::size_t i = 0; i < 50; ++i) cases.push_back(random_structure({1 + i % 6, 4, i % 2 == 0}, rng));
    for (const auto& s : cases) {
        EXPECT_TRUE(identical(parse_2s(write_2s(s)).structure, s));
        EXPECT_TRUE(identical(structure_from_json(structure_to_json(s)).structure, s));
        EXPECT_TRUE(identical(parse_document(write_document({s, std::nullopt}, DocumentFormat::Json),
                                             DocumentFormat::Json).structure, s));
    }
    for (const auto& g : all_graphs(4)) EXPECT_TRUE(identical(parse_graph(write_graph(g)), g) ||
                                                    same_partition(parse_graph(write_graph(g)), g));
    for (const auto& t : all_tournaments(4)) EXPECT_TRUE(identical(parse_tournament(write_tournament(t)), t));
}

TEST(RoundTrip, Extension) {
    auto m2 = fixtures::two_k2();
    auto ext = extend_log(m2);
    auto doc = parse_2s(write_2s(ext));
    ASSERT_TRUE(doc.original);
    EXPECT_EQ(*doc.original, 4u);
    EXPECT_TRUE(identical(doc.structure, ext.tau));
}

TEST(Json, BoundShape) {
    auto j = bound_to_json(primitive_bound(linear_order(3)));
    EXPECT_EQ(j["p"], 2);
    EXPECT_EQ(j["case"], "T4bound");
    EXPECT_TRUE(j["witness"].is_string());
    auto k = bound_to_json(primitive_bound(from_graph(3, {})));
    EXPECT_TRUE(k["p"].is_null());
    EXPECT_EQ(k["sumner"], 2);
}

TEST(Json, TreeShape) {
    auto s = fixtures::p3();
    auto j = tree_to_json(s, clan_tree(s));
    EXPECT_EQ(j["label"]["kind"], "Complete");
    EXPECT_EQ(j["vertices"].size(), 3u);
    EXPECT_EQ(j["children"][0]["vertices"], nlohmann::json::array({0, 2}));
}

TEST(Format, Guessing) {
    EXPECT_EQ(guess_format("x.trn", ""), DocumentFormat::TournamentArcList);
    EXPECT_EQ(guess_format("x.graph", ""), DocumentFormat::GraphEdgeList);
    EXPECT_EQ(guess_format("x", "2s 1\n"), DocumentFormat::TwoStructureText);
    EXPECT_EQ(guess_format("x", "{\"n\":1}"), DocumentFormat::Json);
    EXPECT_EQ(format_from_name("2s"), DocumentFormat::TwoStructureText);
    EXPECT_FALSE(format_from_name("xml"));
}
