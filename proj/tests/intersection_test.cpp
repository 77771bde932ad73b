#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "resolvdim/error.hpp"
#include "resolvdim/intersection.hpp"
#include "resolvdim/resolving.hpp"

using namespace resolvdim;

TEST(SetFamily, Validation) {
    try {
        SetFamily({"a"}, {{0}, {}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyMember);
    }
    EXPECT_THROW(SetFamily({"a"}, {{1}}), Error);
    EXPECT_THROW(SetFamily({"a", "a"}, {{0}}), Error);
    const SetFamily f({"a", "b"}, {{1, 0, 1}});
    EXPECT_EQ(f.members()[0], (std::vector<std::uint32_t>{0, 1}));
}

TEST(IntersectionGraph, Example) {
    const auto fam = SetFamily::from_tokens({{"a", "b"}, {"b", "c"}, {"d"}, {"a", "d"}});
    const auto g = intersection_graph(fam);
    EXPECT_EQ(g.order, 4u);
    EXPECT_EQ(g.edges, (std::vector<Edge>{{1, 2}, {1, 4}, {3, 4}}));
}

TEST(Powerset, Layout) {
    const auto fam = powerset_family(3);
    EXPECT_EQ(fam.size(), 7u);
    EXPECT_EQ(fam.member_tokens(0), (std::vector<std::string>{"1"}));
    EXPECT_EQ(fam.member_tokens(4), (std::vector<std::string>{"1", "3"}));
    EXPECT_EQ(fam.member_tokens(6), (std::vector<std::string>{"1", "2", "3"}));
    EXPECT_THROW(powerset_family(0), Error);
    EXPECT_THROW(powerset_family(17), Error);
}

TEST(Powerset, CorrespondsToComponentGraph) {
    for (std::uint32_t n = 1; n <= 8; ++n) EXPECT_TRUE(check_q2_correspondence(n)) << n;
}

TEST(Powerset, MetricDimensionMatchesFormula) {
    for (std::uint32_t n = 2; n <= 4; ++n) EXPECT_EQ(dim_of_powerset_intersection(n), metric_dimension_formula(2, n));
    EXPECT_THROW(dim_of_powerset_intersection(1), Error);
}

TEST(Realize, ReproducesGraph) {
    const auto path = PlainGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto fam = realize_as_intersection_family(path);
    EXPECT_EQ(fam.member_tokens(1), (std::vector<std::string>{"1-2", "2-3", "v2"}));
    EXPECT_EQ(intersection_graph(fam), path);

    const auto isolated = PlainGraph::from_edges(3, {{1, 2}});
    EXPECT_EQ(intersection_graph(realize_as_intersection_family(isolated)), isolated);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const std::uint32_t order = 1 + rng() % 12;
        std::vector<Edge> edges;
        for (VertexId u = 1; u <= order; ++u)
            for (VertexId v = u + 1; v <= order; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        const auto g = PlainGraph::from_edges(order, edges);
        EXPECT_EQ(intersection_graph(realize_as_intersection_family(g)), g);
    }
    EXPECT_EQ(intersection_graph(realize_as_intersection_family(ComponentGraph(3, 2).to_plain())),
              ComponentGraph(3, 2).to_plain());
}

TEST(Io, SetFamilyRoundTrip) {
    std::istringstream in("# family\na, b\n\nb,c # tail\nd\n");
    const auto fam = read_set_family(in);
    EXPECT_EQ(fam.size(), 3u);
    EXPECT_EQ(fam.ground(), (std::vector<std::string>{"a", "b", "c", "d"}));
    std::ostringstream out;
    write_set_family(out, fam);
    EXPECT_EQ(out.str(), "a,b\nb,c\nd\n");
    std::istringstream again(out.str());
    EXPECT_EQ(read_set_family(again), fam);
}

TEST(Io, SetFamilyErrors) {
    std::istringstream in("a,b\na,,c\n");
    try {
        read_set_family(in);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
}

TEST(Io, EdgeList) {
    std::istringstream in("1 2\n# c\n3 2\n\n");
    const auto g = read_edge_list(in);
    EXPECT_EQ(g.order, 3u);
    EXPECT_EQ(g.edges, (std::vector<Edge>{{1, 2}, {2, 3}}));
    std::istringstream padded("1 2\n");
    EXPECT_EQ(read_edge_list(padded, 5).order, 5u);
    std::istringstream bad("1 2\n0 3\n");
    try {
        read_edge_list(bad);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    std::istringstream junk("1 2 3\n");
    EXPECT_THROW(read_edge_list(junk), ParseError);
}
