/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/graph.hh>
#include <indsat/io.hh>
#include <indsat/pattern_detect.hh>

#include "test_support.hh"

#include <gtest/gtest.h>

#include <sstream>

using namespace indsat;

namespace
{
    auto graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    /// Checks that an embedding really is an induced copy in the realization it describes.
    auto embedding_valid(const Trigraph & t, const PatternGraph & h, const Embedding & e) -> bool
    {
        if (int(e.image.size()) != h.size())
            return false;
        auto r = t;
        for (auto & g : e.resolved) {
            if (t.color(g.pair.u, g.pair.v) != EdgeColor::Gray)
                return false;
            r.set_color(g.pair.u, g.pair.v, g.as_edge ? EdgeColor::Black : EdgeColor::White);
        }
        for (int b = 1 ; b < h.size() ; ++b)
            for (int a = 0 ; a < b ; ++a) {
                auto c = r.color(e.image[unsigned(a)], e.image[unsigned(b)]);
                if (c == EdgeColor::Gray || (c == EdgeColor::Black) != h.graph.adjacent(a, b))
                    return false;
            }
        return true;
    }
}

TEST(Patterns, Factories)
{
    EXPECT_EQ(path_pattern(4).graph.edge_count(), 3);
    EXPECT_EQ(cycle_pattern(4).graph.edge_count(), 4);
    EXPECT_EQ(complete_pattern(5).graph.edge_count(), 10);
    EXPECT_EQ(complete_minus_edge_pattern(4).graph.edge_count(), 5);
    EXPECT_EQ(pattern_by_id("khminus:5").graph.edge_count(), 9);
    EXPECT_EQ(pattern_by_id("p4").name, "p4");
    EXPECT_TRUE(is_p4(pattern_by_id("p4")));
    EXPECT_FALSE(is_p4(pattern_by_id("c4")));
    EXPECT_TRUE(is_self_complementary(path_pattern(4)));
    EXPECT_FALSE(is_self_complementary(complete_pattern(3)));
    EXPECT_THROW(pattern_by_id("q4"), ArgumentError);
    EXPECT_THROW(pattern_by_id("k9"), ArgumentError);
    EXPECT_THROW(pattern_by_id("p1"), ArgumentError);
}

TEST(Patterns, ReadFromFile)
{
    std::istringstream in("graph 4\n0 1\n1 2\n2 3\n");
    auto h = read_pattern(in, "mine");
    EXPECT_EQ(h.name, "mine");
    EXPECT_TRUE(isomorphic(h.graph, path_pattern(4).graph));

    std::istringstream bad("graph 9\n");
    EXPECT_THROW(read_pattern(bad, "x"), ParseError);
}

TEST(ContainsInduced, Examples)
{
    auto p4 = path_pattern(4);
    EXPECT_TRUE(contains_induced(p4.graph, p4));
    EXPECT_FALSE(contains_induced(cycle_pattern(4).graph, p4));
    EXPECT_TRUE(contains_induced(complete_minus_edge_pattern(4).graph, complete_pattern(3)));
    EXPECT_FALSE(contains_induced(complete_pattern(5).graph, p4));
    EXPECT_TRUE(contains_induced(graph_from_edges(6, { { 0, 5 }, { 5, 2 }, { 2, 4 } }), p4));
    EXPECT_FALSE(contains_induced(graph_from_edges(3, { { 0, 1 } }), p4));
}

TEST(ContainsInduced, AgreesWithOracleOnAllGraphsOnFive)
{
    auto p4 = path_pattern(4);
    for (PairMask m = 0 ; m < (PairMask{ 1 } << 10) ; ++m) {
        auto g = Graph::from_edge_mask(5, m);
        ASSERT_EQ(contains_induced(g, p4), test::oracle_has_p4(as_trigraph(g)));
    }
}

TEST(Realization, Examples)
{
    auto p4 = path_pattern(4);
    for (int n = 4 ; n <= 40 ; ++n)
        ASSERT_FALSE(has_realization_of(construct_tn(n).trigraph, p4)) << n;
    EXPECT_TRUE(has_realization_of(complete_gray(4), p4));
    EXPECT_FALSE(has_realization_of(complete_gray(3), p4));

    auto c = construct_tn(5);
    auto f = flip(c.trigraph, Pair{ c.spec.at("a1"), c.spec.at("c1") });
    std::vector<int> path{ c.spec.at("a1"), c.spec.at("b1"), c.spec.at("c1"), c.spec.at("a2") };
    EXPECT_TRUE(realizes(f, p4, path));
    EXPECT_TRUE(has_realization_of(f, p4));
    EXPECT_FALSE(realizes(c.trigraph, p4, path));

    EXPECT_FALSE(has_realization_brute(Trigraph(4), p4));
    EXPECT_TRUE(has_realization_brute(Trigraph(5, EdgeColor::Black), complete_pattern(3)));
}

TEST(Realization, FastBruteAndOracleAgreeOnAllOfFourVertices)
{
    auto p4 = path_pattern(4);
    int positives = 0;
    test::for_each_trigraph(4, [&] (const Trigraph & t) {
        bool fast = has_realization_of(t, p4), brute = has_realization_brute(t, p4);
        ASSERT_EQ(fast, brute);
        ASSERT_EQ(fast, test::oracle_has_p4(t));
        ASSERT_EQ(find_generic_realization(t, p4).has_value(), fast);
        if (auto e = find_realization_of(t, p4)) {
            ASSERT_TRUE(embedding_valid(t, p4, *e));
            ++positives;
        }
    });
    EXPECT_GT(positives, 0);
}

TEST(Realization, RandomSixVertexCorpusAllPatterns)
{
    std::mt19937_64 rng(11);
    std::vector<PatternGraph> patterns{ path_pattern(4), path_pattern(3), complete_pattern(3), cycle_pattern(4),
        complete_minus_edge_pattern(4), path_pattern(5), complete_pattern(4) };
    for (int i = 0 ; i < 1500 ; ++i) {
        auto t = test::random_trigraph(rng, 6, 12);
        for (auto & h : patterns) {
            bool fast = has_realization_of(t, h);
            ASSERT_EQ(fast, has_realization_brute(t, h)) << h.name;
            if (fast) {
                auto e = find_realization_of(t, h);
                ASSERT_TRUE(e);
                ASSERT_TRUE(embedding_valid(t, h, *e)) << h.name;
            }
        }
    }
}

TEST(Realization, PatternLargerThanTrigraph)
{
    EXPECT_FALSE(has_realization_of(complete_gray(3), path_pattern(5)));
    EXPECT_FALSE(has_realization_brute(complete_gray(3), path_pattern(5)));
}

TEST(Realization, BruteCap)
{
    EXPECT_THROW(has_realization_brute(complete_gray(7), path_pattern(4)), ResourceError);
}
