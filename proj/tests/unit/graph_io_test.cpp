#include <helix/errors.hpp>
#include <helix/graph.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace helix;

namespace
{
    auto parse_error_kind(std::string_view text) -> ParseError::Kind
    {
        try {
            parse_dimacs(text);
        }
        catch (const ParseError & e) {
            return e.kind();
        }
        ADD_FAILURE() << "expected a ParseError for: " << text;
        return ParseError::Kind::malformed;
    }

    auto parse_error_line(std::string_view text) -> std::size_t
    {
        try {
            parse_dimacs(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        ADD_FAILURE() << "expected a ParseError";
        return 0;
    }
}

TEST(ParseDimacs, TriangleFromFormatDefinition)
{
    auto r = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
    EXPECT_EQ(r.graph, Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_FALSE(r.duplicate_edges);
    EXPECT_FALSE(r.edge_count_mismatch);
}

TEST(ParseDimacs, ReversedEdgeIsADuplicate)
{
    auto r = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1");
    EXPECT_EQ(r.graph, Graph(2, {{1, 2}}));
    EXPECT_TRUE(r.duplicate_edges);
    EXPECT_TRUE(r.edge_count_mismatch);
    EXPECT_EQ(r.declared_edges, 2u);
}

TEST(ParseDimacs, SelfLoopRejected)
{
    EXPECT_EQ(parse_error_kind("p edge 2 1\ne 1 1"), ParseError::Kind::self_loop);
    EXPECT_EQ(parse_error_line("p edge 2 1\ne 1 1"), 2u);
}

TEST(ParseDimacs, CommentsBlankLinesAndCrlf)
{
    auto r = parse_dimacs("c a comment\r\n\r\nc another\r\np edge 4 2\r\n  e 1 4  \r\ne 2 3\r\n");
    EXPECT_EQ(r.graph, Graph(4, {{1, 4}, {2, 3}}));
    EXPECT_FALSE(r.edge_count_mismatch);
}

TEST(ParseDimacs, DeclaredCountMismatchIsOnlyAWarning)
{
    auto r = parse_dimacs("p edge 4 10\ne 1 2\n");
    EXPECT_EQ(r.graph.edge_count(), 1u);
    EXPECT_TRUE(r.edge_count_mismatch);
    EXPECT_FALSE(r.duplicate_edges);
}

TEST(ParseDimacs, EdgelessGraph)
{
    auto r = parse_dimacs("p edge 5 0\n");
    EXPECT_EQ(r.graph.vertex_count(), 5);
    EXPECT_EQ(r.graph.edge_count(), 0u);
}

TEST(ParseDimacs, EndpointOutOfRange)
{
    EXPECT_EQ(parse_error_kind("p edge 3 1\ne 1 4\n"), ParseError::Kind::out_of_range);
    EXPECT_EQ(parse_error_kind("p edge 3 1\ne 0 2\n"), ParseError::Kind::out_of_range);
    EXPECT_EQ(parse_error_kind("p edge 3 1\ne -1 2\n"), ParseError::Kind::out_of_range);
}

TEST(ParseDimacs, MissingHeader)
{
    EXPECT_EQ(parse_error_kind(""), ParseError::Kind::missing_header);
    EXPECT_EQ(parse_error_kind("c only comments\n"), ParseError::Kind::missing_header);
    EXPECT_EQ(parse_error_line("c only comments\n"), 0u);
    EXPECT_EQ(parse_error_kind("e 1 2\np edge 2 1\n"), ParseError::Kind::missing_header);
}

TEST(ParseDimacs, MalformedLinesCarryTheirLineNumber)
{
    EXPECT_EQ(parse_error_kind("p edge 3 1\ne 1\n"), ParseError::Kind::malformed);
    EXPECT_EQ(parse_error_line("p edge 3 1\ne 1\n"), 2u);
    EXPECT_EQ(parse_error_kind("p col 3 1\n"), ParseError::Kind::malformed);
    EXPECT_EQ(parse_error_kind("p edge three 1\n"), ParseError::Kind::malformed);
    EXPECT_EQ(parse_error_kind("p edge 0 0\n"), ParseError::Kind::malformed);
    EXPECT_EQ(parse_error_kind("p edge 3 1\np edge 3 1\n"), ParseError::Kind::malformed);
    EXPECT_EQ(parse_error_kind("p edge 3 1\nx 1 2\n"), ParseError::Kind::malformed);
    EXPECT_EQ(parse_error_line("c\nc\np edge 3 1\ne 1 2x\n"), 4u);

    try {
        parse_dimacs("p edge 3 1\ne 1 2 3\n");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_NE(std::string{e.what()}.find("line 2"), std::string::npos);
    }
}

TEST(ParseDimacs, ReadsFromStream)
{
    std::istringstream in{"p edge 3 2\ne 1 2\ne 2 3\n"};
    EXPECT_EQ(parse_dimacs(in).graph, Graph(3, {{1, 2}, {2, 3}}));
}

TEST(ParseDimacs, FixtureFile)
{
    std::ifstream in{HELIX_TEST_DATA_DIR "/petersen.col"};
    ASSERT_TRUE(in);
    auto r = parse_dimacs(in);
    EXPECT_EQ(r.graph, builtin_graph("petersen"));
    EXPECT_FALSE(r.edge_count_mismatch);
}

TEST(Graph, NormalisesAndDedupes)
{
    Graph g(4, {{3, 1}, {1, 3}, {4, 2}});
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.adjacent(1, 3));
    EXPECT_TRUE(g.adjacent(3, 1));
    EXPECT_FALSE(g.adjacent(1, 2));
    for (auto [u, v] : g.edges())
        EXPECT_LT(u, v);
}

TEST(Graph, RejectsInvalidEdges)
{
    EXPECT_THROW(Graph(3, {{2, 2}}), GraphError);
    EXPECT_THROW(Graph(3, {{1, 4}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}}), GraphError);
    EXPECT_THROW(Graph(-1, {}), GraphError);
}

TEST(Graph, NeighboursSorted)
{
    auto g = builtin_graph("petersen");
    auto nb = g.neighbours(1);
    EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{2, 5, 6}));
    EXPECT_TRUE(g.neighbours(0).empty());
    EXPECT_TRUE(g.neighbours(11).empty());
}

TEST(Graph, InducedRelabelsInGivenOrder)
{
    auto c5 = builtin_graph("c5");
    std::vector<Vertex> first4{1, 2, 3, 4};
    EXPECT_EQ(c5.induced(first4), Graph(4, {{1, 2}, {2, 3}, {3, 4}}));

    std::vector<Vertex> picked{5, 1, 3};
    EXPECT_EQ(c5.induced(picked), Graph(3, {{1, 2}}));

    std::vector<Vertex> none;
    EXPECT_EQ(c5.induced(none).vertex_count(), 0);

    std::vector<Vertex> repeated{1, 1};
    EXPECT_THROW(c5.induced(repeated), GraphError);
}

TEST(BuiltinGraph, CompleteGraphs)
{
    EXPECT_EQ(builtin_graph("k3"), Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
    auto k4 = builtin_graph("k4");
    EXPECT_EQ(k4.vertex_count(), 4);
    EXPECT_EQ(k4.edge_count(), 6u);
}

TEST(BuiltinGraph, CycleAndPath)
{
    EXPECT_EQ(builtin_graph("c5"), Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}));
    EXPECT_EQ(builtin_graph("p4"), Graph(4, {{1, 2}, {2, 3}, {3, 4}}));
}

TEST(BuiltinGraph, CompleteBipartite)
{
    auto g = builtin_graph("k33");
    EXPECT_EQ(g.vertex_count(), 6);
    EXPECT_EQ(g.edge_count(), 9u);
    for (Vertex a = 1; a <= 3; ++a)
        for (Vertex b = 4; b <= 6; ++b)
            EXPECT_TRUE(g.adjacent(a, b));
    EXPECT_FALSE(g.adjacent(1, 2));
    EXPECT_FALSE(g.adjacent(4, 5));
}

TEST(BuiltinGraph, Petersen)
{
    auto g = builtin_graph("petersen");
    EXPECT_EQ(g.vertex_count(), 10);
    // Counted from the construction: 5 outer + 5 pentagram + 5 spokes.
    EXPECT_EQ(g.edge_count(), 15u);
    for (Vertex v = 1; v <= 10; ++v)
        EXPECT_EQ(g.neighbours(v).size(), 3u) << "vertex " << v;
    for (Vertex i = 1; i <= 5; ++i)
        EXPECT_TRUE(g.adjacent(i, i + 5));
    EXPECT_TRUE(g.adjacent(6, 8));
    EXPECT_FALSE(g.adjacent(6, 7));

    // Girth 5: no triangles and no 4-cycles.
    for (Vertex a = 1; a <= 10; ++a)
        for (Vertex b = a + 1; b <= 10; ++b) {
            int common = 0;
            for (Vertex c = 1; c <= 10; ++c)
                common += g.adjacent(a, c) && g.adjacent(b, c);
            EXPECT_EQ(common, g.adjacent(a, b) ? 0 : 1) << a << "," << b;
        }
}

TEST(BuiltinGraph, UnknownNameListsValidOnes)
{
    try {
        builtin_graph("k5");
        FAIL();
    }
    catch (const LookupError & e) {
        std::string msg = e.what();
        for (auto name : builtin_graph_names())
            EXPECT_NE(msg.find(name), std::string::npos) << name;
    }
    EXPECT_EQ(builtin_graph_names().size(), 6u);
}

TEST(BuiltinGraph, EdgesNormalised)
{
    for (auto name : builtin_graph_names()) {
        auto g = builtin_graph(name);
        for (auto [u, v] : g.edges()) {
            EXPECT_GE(u, 1);
            EXPECT_LT(u, v);
            EXPECT_LE(v, g.vertex_count());
        }
    }
}

TEST(RenderDimacs, RoundTripBuiltins)
{
    for (auto name : builtin_graph_names()) {
        auto g = builtin_graph(name);
        auto r = parse_dimacs(render_dimacs(g));
        EXPECT_EQ(r.graph, g) << name;
        EXPECT_FALSE(r.edge_count_mismatch);
    }
}

TEST(RenderDimacs, RoundTripRandomGraphs)
{
    std::mt19937_64 rng{2024};
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<Vertex>(1 + rng() % 15);
        std::vector<Edge> edges;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0)
                    edges.push_back({v, u});
        Graph g(n, edges);
        EXPECT_EQ(parse_dimacs(render_dimacs(g)).graph, g);
    }
}
