/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/io.hh>
#include <indsat/trigraph.hh>

#include "test_support.hh"

#include <gtest/gtest.h>

#include <sstream>

using namespace indsat;

namespace
{
    auto tn5() -> Construction { return construct_tn(5); }
}

TEST(Bits, ColexPairIndex)
{
    EXPECT_EQ(pair_index(0, 1), 0);
    EXPECT_EQ(pair_index(0, 2), 1);
    EXPECT_EQ(pair_index(1, 2), 2);
    EXPECT_EQ(pair_index(0, 3), 3);
    EXPECT_EQ(pair_index(2, 3), 5);
    for (int p = 0 ; p < num_pairs(16) ; ++p) {
        auto [u, v] = pair_at(p);
        ASSERT_LT(u, v);
        ASSERT_EQ(pair_index(u, v), p);
    }
    EXPECT_EQ(num_pairs(16), 120);
}

TEST(Trigraph, CompleteGray)
{
    EXPECT_EQ(complete_gray(0).pair_count(), 0);
    EXPECT_EQ(complete_gray(3).count(EdgeColor::Gray), 3);
    EXPECT_EQ(complete_gray(5).count(EdgeColor::Gray), 10);
}

TEST(Trigraph, SizeBounds)
{
    EXPECT_NO_THROW(Trigraph(64));
    EXPECT_THROW(Trigraph(65), SizeError);
    EXPECT_THROW(Trigraph::from_masks(17, 0, 0), SizeError);
    EXPECT_THROW(Trigraph(20).gray_mask(), SizeError);
    EXPECT_EQ(Trigraph(40, EdgeColor::Black).count(EdgeColor::Black), num_pairs(40));
}

TEST(Trigraph, ColorsAndMasks)
{
    Trigraph t(4);
    t.set_color(0, 1, EdgeColor::Black);
    t.set_color(3, 2, EdgeColor::Gray);
    EXPECT_EQ(t.color(1, 0), EdgeColor::Black);
    EXPECT_EQ(t.color(2, 3), EdgeColor::Gray);
    EXPECT_EQ(t.color_at(pair_index(2, 3)), EdgeColor::Gray);
    EXPECT_EQ(t.black_mask(), bit(0));
    EXPECT_EQ(t.gray_mask(), bit(5));
    EXPECT_EQ(t.white_mask(), low_bits(6) & ~(bit(0) | bit(5)));
    EXPECT_EQ(Trigraph::from_masks(4, t.black_mask(), t.gray_mask()), t);
    EXPECT_THROW(t.set_color(1, 1, EdgeColor::Gray), ArgumentError);
    EXPECT_THROW(t.set_color(0, 4, EdgeColor::Gray), ArgumentError);
    EXPECT_THROW(Trigraph::from_masks(3, bit(1), bit(1)), ArgumentError);
}

TEST(Trigraph, Complement)
{
    EXPECT_EQ(complement(complete_gray(4)), complete_gray(4));
    EXPECT_EQ(complement(Trigraph(3, EdgeColor::Black)), Trigraph(3, EdgeColor::White));

    auto t = tn5().trigraph;
    auto c = complement(t);
    EXPECT_EQ(c.gray_mask(), t.gray_mask());
    EXPECT_EQ(c.black_mask(), t.white_mask());
    EXPECT_EQ(complement(c), t);
}

TEST(Trigraph, Flip)
{
    auto f = flip(Trigraph(2), Pair{ 0, 1 });
    EXPECT_EQ(f.count(EdgeColor::Gray), 1);

    auto t = tn5().trigraph;
    EXPECT_EQ(flip(t, Pair{ 0, 1 }), t);
    EXPECT_THROW(flip(t, Pair{ 2, 2 }), ArgumentError);
}

TEST(Trigraph, Induced)
{
    auto c = tn5();
    auto & t = c.trigraph;

    std::vector<int> all{ 0, 1, 2, 3, 4 };
    EXPECT_EQ(induced(t, all).trigraph, t);

    std::vector<int> s{ c.spec.at("a1"), c.spec.at("b1"), c.spec.at("c1") };
    auto sub = induced(t, s);
    EXPECT_EQ(sub.vertex_map, s);
    EXPECT_EQ(sub.trigraph.color(0, 1), EdgeColor::Gray);
    EXPECT_EQ(sub.trigraph.color(0, 2), EdgeColor::Black);
    EXPECT_EQ(sub.trigraph.color(1, 2), EdgeColor::Black);

    std::vector<int> three{ 1, 3, 4 };
    EXPECT_EQ(induced(complete_gray(5), three).trigraph, complete_gray(3));

    std::vector<int> bad{ 0, 7 }, repeated{ 1, 1 };
    EXPECT_THROW(induced(t, bad), ArgumentError);
    EXPECT_THROW(induced(t, repeated), ArgumentError);
}

TEST(Trigraph, RelabelPreservesColours)
{
    auto t = construct_tn(7).trigraph;
    std::vector<int> perm{ 3, 6, 0, 5, 1, 4, 2 };
    auto r = relabel(t, perm);
    for (int v = 1 ; v < 7 ; ++v)
        for (int u = 0 ; u < v ; ++u)
            ASSERT_EQ(r.color(perm[unsigned(u)], perm[unsigned(v)]), t.color(u, v));
}

TEST(Trigraph, Components)
{
    auto c = tn5();
    auto comps = components(c.trigraph, ColorSet{ EdgeColor::Gray });
    std::vector<std::vector<int>> expected{
        { c.spec.at("a1"), c.spec.at("b1") }, { c.spec.at("c1") }, { c.spec.at("a2"), c.spec.at("b2") } };
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(comps, expected);

    EXPECT_EQ(components(Trigraph(4), ColorSet{ EdgeColor::Black, EdgeColor::Gray }).size(), 4u);
    EXPECT_EQ(components(complete_gray(3), ColorSet{ EdgeColor::Gray }).size(), 1u);
}

TEST(Trigraph, CutColors)
{
    auto c = tn5();
    std::vector<int> c1{ c.spec.at("c1") }, ab1{ c.spec.at("a1"), c.spec.at("b1") }, ab2{ c.spec.at("a2"), c.spec.at("b2") }, none;
    EXPECT_EQ(cut_colors(c.trigraph, c1, ab1), (std::vector<EdgeColor>{ EdgeColor::Black, EdgeColor::Black }));
    EXPECT_EQ(cut_colors(c.trigraph, c1, ab2), (std::vector<EdgeColor>{ EdgeColor::Black, EdgeColor::Black }));
    EXPECT_TRUE(cut_colors(c.trigraph, c1, none).empty());
    EXPECT_THROW(cut_colors(c.trigraph, ab1, ab1), ArgumentError);
}

TEST(TrigraphIo, RoundTrip)
{
    std::mt19937_64 rng(7);
    for (int i = 0 ; i < 200 ; ++i) {
        auto t = test::random_trigraph(rng, 1 + i % 12, 20);
        std::stringstream s;
        write_trigraph(s, t);
        ASSERT_EQ(read_trigraph(s), t);
    }

    auto big = construct_tn(40).trigraph;
    std::stringstream s;
    write_trigraph(s, big);
    EXPECT_EQ(read_trigraph(s), big);
}

TEST(TrigraphIo, CommentsAndDefaults)
{
    std::istringstream in("# a comment\ntrigraph 3\n\n0 1 G   # gray\n1 2 B\n");
    auto t = read_trigraph(in);
    EXPECT_EQ(t.color(0, 1), EdgeColor::Gray);
    EXPECT_EQ(t.color(1, 2), EdgeColor::Black);
    EXPECT_EQ(t.color(0, 2), EdgeColor::White);
}

TEST(TrigraphIo, Rejects)
{
    for (std::string text : {
            "", "graph 3\n", "trigraph\n", "trigraph 65\n", "trigraph 3\n0 1 X\n", "trigraph 3\n1 0 B\n",
            "trigraph 3\n0 3 B\n", "trigraph 3\n0 1 B\n0 1 W\n", "trigraph 3\n0 1 B extra\n", "trigraph 3\n0 0 B\n" }) {
        std::istringstream in(text);
        EXPECT_THROW(read_trigraph(in), ParseError) << text;
    }

    std::istringstream in("trigraph 3\n0 1 B\n2 1 B\n");
    try {
        read_trigraph(in);
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3);
    }
}
